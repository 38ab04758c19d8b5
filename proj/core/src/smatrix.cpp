#include "latpack/smatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace latpack {

SMat SMat::identity(int n) {
    SMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = QSqrt2(1);
    return m;
}

bool SMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool SMat::is_rational() const {
    return std::all_of(a_.begin(), a_.end(), [](const QSqrt2& x) { return x.is_rational(); });
}

bool SMat::is_integral() const {
    return std::all_of(a_.begin(), a_.end(), [](const QSqrt2& x) { return x.is_integer(); });
}

SMat SMat::transpose() const {
    SMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

SMat SMat::operator*(const SMat& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
    SMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const QSqrt2& f = at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += f * o.at(k, j);
        }
    return r;
}

SMat SMat::operator+(const SMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum shape mismatch");
    SMat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

SMat SMat::operator-(const SMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference shape mismatch");
    SMat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

SMat SMat::scaled(const QSqrt2& f) const {
    SMat r = *this;
    for (auto& x : r.a_) x *= f;
    return r;
}

QSqrt2 det(const SMat& m) {
    if (!m.is_square()) throw PreconditionError("determinant of non-square matrix");
    int n = m.rows();
    SMat w = m;
    QSqrt2 d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!w.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) return QSqrt2(0);
        if (p != c) {
            for (int j = c; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        QSqrt2 inv = w.at(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (w.at(r, c).is_zero()) continue;
            QSqrt2 f = w.at(r, c) * inv;
            for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
        }
    }
    return d;
}

SMat inverse(const SMat& m) {
    if (!m.is_square()) throw PreconditionError("inverse of non-square matrix");
    int n = m.rows();
    SMat w = m, inv = SMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!w.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) throw PreconditionError("matrix is singular");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(p, j), w.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        QSqrt2 pivinv = w.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            w.at(c, j) *= pivinv;
            inv.at(c, j) *= pivinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || w.at(r, c).is_zero()) continue;
            QSqrt2 f = w.at(r, c);
            for (int j = 0; j < n; ++j) {
                w.at(r, j) -= f * w.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

bool is_positive_definite(const SMat& m) {
    if (!m.is_symmetric()) return false;
    int n = m.rows();
    SMat w = m;
    // Pivots of unswapped elimination are quotients of leading minors; all
    // must be positive.
    for (int c = 0; c < n; ++c) {
        if (w.at(c, c).sign() <= 0) return false;
        QSqrt2 inv = w.at(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (w.at(r, c).is_zero()) continue;
            QSqrt2 f = w.at(r, c) * inv;
            for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
        }
    }
    return true;
}

std::vector<int> rref(SMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        QSqrt2 pivinv = m.at(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= pivinv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            QSqrt2 f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

SMat IMat::to_smat() const {
    SMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = QSqrt2(Rational(at(i, j)));
    return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

IMat hnf_row_basis(const IMat& m) {
    int cols = m.cols();
    std::vector<std::vector<Int>> pool;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Int> row(cols);
        bool nonzero = false;
        for (int j = 0; j < cols; ++j) {
            row[j] = m.at(i, j);
            nonzero = nonzero || row[j] != 0;
        }
        if (nonzero) pool.push_back(std::move(row));
    }
    std::vector<std::vector<Int>> basis;
    std::vector<int> pivcol;
    for (int c = 0; c < cols; ++c) {
        for (;;) {
            int best = -1;
            int live = 0;
            for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
                if (pool[i][c] == 0) continue;
                ++live;
                if (best < 0 || abs(pool[i][c]) < abs(pool[best][c])) best = i;
            }
            if (live == 0) break;
            if (live == 1) {
                auto row = std::move(pool[best]);
                pool.erase(pool.begin() + best);
                if (row[c] < 0)
                    for (auto& x : row) x = -x;
                basis.push_back(std::move(row));
                pivcol.push_back(c);
                break;
            }
            for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
                if (i == best || pool[i][c] == 0) continue;
                Int t = pool[i][c] / pool[best][c];
                if (t != 0)
                    for (int j = 0; j < cols; ++j) pool[i][j] -= t * pool[best][j];
            }
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int c = pivcol[i];
        for (std::size_t j = 0; j < i; ++j) {
            Int t = floor_div(basis[j][c], basis[i][c]);
            if (t != 0)
                for (int k = 0; k < cols; ++k) basis[j][k] -= t * basis[i][k];
        }
    }
    IMat out(static_cast<int>(basis.size()), cols);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = basis[i][j];
    return out;
}

SMat lattice_row_basis(const SMat& m) {
    if (!m.is_rational())
        throw PreconditionError("integer row reduction requires rational entries");
    Int l = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, den(m.at(i, j).rat));
    IMat im(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            im.at(i, j) = num(m.at(i, j).rat) * (l / den(m.at(i, j).rat));
    IMat h = hnf_row_basis(im);
    SMat out(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            out.at(i, j) = QSqrt2(Rational(h.at(i, j), l));
    return out;
}

namespace {

struct GsData {
    std::vector<std::vector<double>> mu;
    std::vector<double> bst;
    bool ok = true;
};

GsData gram_schmidt(const std::vector<std::vector<double>>& g) {
    int n = static_cast<int>(g.size());
    GsData d;
    d.mu.assign(n, std::vector<double>(n, 0.0));
    d.bst.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            double s = g[i][j];
            for (int k = 0; k < j; ++k) s -= d.mu[i][k] * d.mu[j][k] * d.bst[k];
            if (d.bst[j] <= 0) { d.ok = false; return d; }
            d.mu[i][j] = s / d.bst[j];
        }
        double b = g[i][i];
        for (int k = 0; k < i; ++k) b -= d.mu[i][k] * d.mu[i][k] * d.bst[k];
        d.bst[i] = b;
        if (b <= 0) { d.ok = false; return d; }
    }
    return d;
}

} // namespace

LllResult lll_reduce_gram(const SMat& gram) {
    if (!gram.is_symmetric()) throw PreconditionError("LLL requires a symmetric Gram matrix");
    int n = gram.rows();
    IMat u = IMat::identity(n);
    if (n <= 1) return {gram, u};

    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = gram.at(i, j).to_double();

    const double delta = 0.99;
    long iter = 0, max_iter = 4096L * n * n;
    int k = 1;
    GsData gs = gram_schmidt(g);
    while (k < n && gs.ok && iter++ < max_iter) {
        for (int j = k - 1; j >= 0; --j) {
            double mu = gs.mu[k][j];
            if (std::abs(mu) <= 0.5) continue;
            double xr = std::nearbyint(mu);
            if (std::abs(xr) > 9e15) throw PrecisionError("LLL size-reduction coefficient overflow");
            long long x = static_cast<long long>(xr);
            for (int c = 0; c < n; ++c) u.at(k, c) -= Int(x) * u.at(j, c);
            std::vector<double> rowk = g[k];
            for (int c = 0; c < n; ++c) rowk[c] -= xr * g[j][c];
            // rowk[k] currently holds g_kk - x*g_jk; finish the quadratic
            // update to g_kk - 2x*g_kj + x^2*g_jj.
            rowk[k] += -xr * g[k][j] + xr * xr * g[j][j];
            g[k] = rowk;
            for (int c = 0; c < n; ++c) g[c][k] = g[k][c];
            gs = gram_schmidt(g);
            if (!gs.ok) break;
        }
        if (!gs.ok) break;
        double lhs = gs.bst[k];
        double rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bst[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            for (int c = 0; c < n; ++c) std::swap(u.at(k, c), u.at(k - 1, c));
            std::swap(g[k], g[k - 1]);
            for (int r = 0; r < n; ++r) std::swap(g[r][k], g[r][k - 1]);
            gs = gram_schmidt(g);
            k = std::max(1, k - 1);
        }
    }
    return {u.to_smat() * gram * u.to_smat().transpose(), u};
}

} // namespace latpack
