#include "latpack/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "latpack/errors.hpp"

namespace latpack {

namespace {

// Row vector times matrix.
std::vector<QSqrt2> row_times(const std::vector<QSqrt2>& v, const SMat& m) {
    std::vector<QSqrt2> out(m.cols(), QSqrt2(0));
    for (int j = 0; j < m.cols(); ++j) {
        QSqrt2 s(0);
        for (int i = 0; i < m.rows(); ++i) s += v[i] * m.at(i, j);
        out[j] = s;
    }
    return out;
}

std::vector<QSqrt2> code_word_offset(std::uint32_t w, int n, const Rational& unit) {
    std::vector<QSqrt2> off(n, QSqrt2(0));
    for (int i = 0; i < n; ++i)
        if ((w >> i) & 1) off[i] = QSqrt2(unit);
    return off;
}

} // namespace

Lattice z_n(int n) {
    if (n < 1) throw PreconditionError("z_n needs n >= 1");
    std::string name = n == 1 ? "Z" : "Z" + std::to_string(n);
    return Lattice::from_basis(std::move(name), SMat::identity(n));
}

Lattice d_lattice(int n) {
    if (n < 2) throw PreconditionError("d_lattice needs n >= 2");
    SMat b(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        b.at(i, i) = QSqrt2(1);
        b.at(i, i + 1) = QSqrt2(-1);
    }
    b.at(n - 1, n - 2) = QSqrt2(1);
    b.at(n - 1, n - 1) = QSqrt2(1);
    return Lattice::from_basis("D" + std::to_string(n), b);
}

PeriodicPacking construction_a(const BinaryCode& c, std::string name) {
    int n = c.length();
    SMat b(n, n);
    for (int i = 0; i < n; ++i) b.at(i, i) = QSqrt2(2);
    Lattice base = Lattice::from_basis("2Z" + std::to_string(n), std::move(b));

    std::uint32_t shift = c.contains(0) ? 0 : c.words().front();
    std::vector<std::vector<QSqrt2>> offsets;
    offsets.reserve(c.size());
    for (std::uint32_t w : c.words())
        offsets.push_back(code_word_offset(w ^ shift, n, Rational(1, 2)));

    if (name.empty()) {
        name = c.is_linear() ? "A[" + std::to_string(n) + "," + std::to_string(c.dimension()) + "]"
                             : "A(" + std::to_string(n) + "," + std::to_string(c.size()) + ")";
    }
    return PeriodicPacking::make(std::move(name), std::move(base), std::move(offsets));
}

Lattice packing_to_lattice(const PeriodicPacking& p, std::string name) {
    const Lattice& base = p.base();
    if (!base.basis()) throw PreconditionError("packing base carries no basis");
    const SMat& b = *base.basis();
    int n = b.rows(), m = b.cols();
    std::size_t k = p.offsets().size();

    SMat rows(n + static_cast<int>(k), m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) rows.at(i, j) = b.at(i, j);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<QSqrt2> amb = row_times(p.offsets()[t], b);
        for (int j = 0; j < m; ++j) rows.at(n + static_cast<int>(t), j) = amb[j];
    }

    Lattice out = Lattice::from_basis(name.empty() ? p.name() : std::move(name),
                                      lattice_row_basis(rows));
    QSqrt2 classes(Rational(Int(k) * Int(k)));
    if (out.determinant() * classes != base.determinant())
        throw ConstructionError("point set of " + p.name() + " is not closed under addition");
    return out;
}

Lattice construction_a_lattice(const BinaryCode& c, std::string name) {
    if (!c.is_linear()) throw PreconditionError("construction A lattice needs a linear code");
    PeriodicPacking p = construction_a(c, std::move(name));
    return packing_to_lattice(p, p.name());
}

Lattice construction_b(const BinaryCode& c, std::string name) {
    if (!c.is_linear()) throw PreconditionError("construction B needs a linear code");
    for (std::uint32_t w : c.words())
        if (std::popcount(w) & 1)
            throw PreconditionError("construction B needs even codeword weights");
    Lattice a = construction_a_lattice(c);
    const SMat& b = *a.basis();
    int n = c.length();

    // Coordinate sums are even throughout the lattice; halving them turns
    // the sum-divisible-by-4 condition into a parity kernel.
    std::vector<Int> t(n);
    int pivot = -1;
    for (int i = 0; i < n; ++i) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += b.at(i, j).rat;
        Rational h = s / 2;
        if (denominator(h) != 1)
            throw ConstructionError("basis row with odd coordinate sum");
        t[i] = numerator(h);
        if (pivot < 0 && (t[i] & 1) != 0) pivot = i;
    }
    SMat rows(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QSqrt2 v = b.at(i, j);
            if (i == pivot)
                v = v * QSqrt2(2);
            else if (pivot >= 0 && (t[i] & 1) != 0)
                v -= b.at(pivot, j);
            rows.at(i, j) = v;
        }
    if (name.empty())
        name = "B[" + std::to_string(n) + "," + std::to_string(c.dimension()) + "]";
    return Lattice::from_basis(std::move(name), lattice_row_basis(rows));
}

namespace {

Lattice build_leech_from_golay() {
    Lattice lb = construction_b(golay24());
    const SMat& kb = *lb.basis();
    const int n = 24;

    SMat rows(n + 1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows.at(i, j) = kb.at(i, j);
    for (int j = 0; j < n; ++j) rows.at(n, j) = QSqrt2(Rational(1, 2));
    rows.at(n, 0) = QSqrt2(Rational(-3, 2));

    Lattice raw = Lattice::from_basis("Leech", lattice_row_basis(rows));
    if (raw.determinant() != QSqrt2(Rational(Int(1) << 24)))
        throw ConstructionError("glued span has the wrong determinant");
    Lattice leech = raw.scaled(QSqrt2(Rational(1, 2))).renamed("Leech");
    if (!leech.is_even() || leech.determinant() != QSqrt2(1))
        throw ConstructionError("rescaled lattice is not even unimodular");
    return leech;
}

} // namespace

Lattice leech_from_golay() {
    static const Lattice cached = build_leech_from_golay();
    return cached;
}

Rational lorentz_product(const LorentzianVector& a, const LorentzianVector& b) {
    if (a.x.size() != 26 || b.x.size() != 26)
        throw PreconditionError("lorentz vectors have 26 coordinates");
    Rational s = 0;
    for (int i = 0; i < 25; ++i) s += a.x[i] * b.x[i];
    return s - a.x[25] * b.x[25];
}

bool in_even_lorentzian(const LorentzianVector& v) {
    if (v.x.size() != 26) throw PreconditionError("lorentz vectors have 26 coordinates");
    bool half = denominator(v.x[0]) == 2;
    Rational s = 0;
    for (int i = 0; i < 26; ++i) {
        Int d = denominator(v.x[i]);
        if (d != (half ? 2 : 1)) return false;
        s += i < 25 ? v.x[i] : -v.x[i];
    }
    return denominator(s) == 1 && numerator(s) % 2 == 0;
}

namespace {

// Unimodular u with u * v = (g, 0, ..., 0), g = gcd > 0, by repeated
// division steps on the smallest nonzero entry.
IMat reduce_vector_transform(const std::vector<Int>& v) {
    int m = static_cast<int>(v.size());
    IMat u = IMat::identity(m);
    std::vector<Int> w = v;
    auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };
    while (true) {
        int p = -1;
        for (int i = 0; i < m; ++i)
            if (w[i] != 0 && (p < 0 || abs_of(w[i]) < abs_of(w[p]))) p = i;
        if (p < 0) throw PreconditionError("cannot reduce the zero vector");
        bool others = false;
        for (int i = 0; i < m; ++i) {
            if (i == p || w[i] == 0) continue;
            others = true;
            Int q = w[i] / w[p];
            if (q != 0) {
                w[i] -= q * w[p];
                for (int j = 0; j < m; ++j) u.at(i, j) -= q * u.at(p, j);
            }
        }
        if (!others) {
            if (p != 0) {
                std::swap(w[0], w[p]);
                for (int j = 0; j < m; ++j) std::swap(u.at(0, j), u.at(p, j));
            }
            if (w[0] < 0)
                for (int j = 0; j < m; ++j) u.at(0, j) = -u.at(0, j);
            return u;
        }
    }
}

// Pairwise signature-(25,1) products of the rows of m.
SMat lorentz_gram(const SMat& m) {
    SMat g(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j) {
            QSqrt2 s(0);
            for (int k = 0; k < 25; ++k) s += m.at(i, k) * m.at(j, k);
            s -= m.at(i, 25) * m.at(j, 25);
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    return g;
}

Rational rational_of(const QSqrt2& x) {
    if (x.rad != 0) throw ConstructionError("unexpected irrational entry");
    return x.rat;
}

Int int_of(const Rational& r) {
    if (denominator(r) != 1) throw ConstructionError("unexpected non-integer");
    return numerator(r);
}

Lattice build_leech_from_lorentzian() {
    // Basis of the even unimodular Lorentzian lattice: D25 in the spacelike
    // coordinates plus the all-halves glue vector.
    SMat m(26, 26);
    for (int i = 0; i < 24; ++i) {
        m.at(i, i) = QSqrt2(1);
        m.at(i, i + 1) = QSqrt2(-1);
    }
    m.at(24, 23) = QSqrt2(1);
    m.at(24, 24) = QSqrt2(1);
    for (int j = 0; j < 26; ++j) m.at(25, j) = QSqrt2(Rational(1, 2));

    SMat g26 = lorentz_gram(m);
    if (!g26.is_integral() || det(g26) != QSqrt2(-1))
        throw ConstructionError("ambient lattice is not even unimodular of signature (25,1)");
    for (int i = 0; i < 26; ++i)
        if (numerator(rational_of(g26.at(i, i))) % 2 != 0)
            throw ConstructionError("ambient lattice is not even");

    LorentzianVector w;
    w.x.resize(26);
    for (int i = 0; i < 25; ++i) w.x[i] = i;
    w.x[25] = 70;
    if (lorentz_product(w, w) != 0 || !in_even_lorentzian(w))
        throw ConstructionError("weyl vector is not isotropic in the lattice");

    // a_i = <row_i, w>; the kernel of y -> y.a is w-perp in basis coordinates.
    std::vector<Int> a(26);
    for (int i = 0; i < 26; ++i) {
        Rational s = 0;
        for (int k = 0; k < 25; ++k) s += rational_of(m.at(i, k)) * w.x[k];
        s -= rational_of(m.at(i, 25)) * w.x[25];
        a[i] = int_of(s);
    }
    IMat u = reduce_vector_transform(a);
    SMat kernel(25, 26);
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 26; ++j) kernel.at(i, j) = QSqrt2(Rational(u.at(i + 1, j)));

    // Coefficients of w over the kernel rows: expand w in the u-transformed
    // basis; the gcd-row component vanishes because w is isotropic.
    std::vector<QSqrt2> wrow(26);
    for (int i = 0; i < 26; ++i) wrow[i] = QSqrt2(w.x[i]);
    std::vector<QSqrt2> c = row_times(wrow, inverse(m));
    std::vector<QSqrt2> y = row_times(c, inverse(u.to_smat()));
    if (y[0] != QSqrt2(0))
        throw ConstructionError("weyl vector is not orthogonal to itself");
    std::vector<Int> d(25);
    for (int i = 0; i < 25; ++i) d[i] = int_of(rational_of(y[i + 1]));

    // Change the kernel basis so its first row is w itself.
    IMat v = reduce_vector_transform(d);
    SMat vinv = inverse(v.to_smat());
    // v * d = (g, 0, ...) with g = gcd(d); need g = 1 so that w is a basis
    // vector of w-perp.
    Int g = 0;
    for (int j = 0; j < 25; ++j) g += v.at(0, j) * d[j];
    if (g != 1)
        throw ConstructionError("weyl vector is imprimitive in its orthogonal complement");
    SMat s = vinv.transpose();
    SMat basis25 = s * kernel * m;
    for (int j = 0; j < 26; ++j)
        if (basis25.at(0, j) != QSqrt2(w.x[j]))
            throw ConstructionError("basis change lost the weyl vector");

    SMat g25 = lorentz_gram(basis25);
    for (int j = 0; j < 25; ++j)
        if (g25.at(0, j) != QSqrt2(0))
            throw ConstructionError("weyl row of the quotient form is not null");
    SMat g24(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) g24.at(i, j) = g25.at(i + 1, j + 1);
    Lattice leech = Lattice::from_gram("Leech", std::move(g24));
    if (!leech.is_even() || leech.determinant() != QSqrt2(1))
        throw ConstructionError("quotient form is not even unimodular");
    return leech;
}

} // namespace

Lattice leech_from_lorentzian() {
    static const Lattice cached = build_leech_from_lorentzian();
    return cached;
}

PeriodicPacking construction_bstar(const BinaryCode& b, const BinaryCode& c,
                                   std::string name) {
    if (b.length() != c.length())
        throw PreconditionError("codes have different lengths");
    int n = b.length();
    if (n < 2) throw PreconditionError("construction B* needs length >= 2");
    if (!b.contains(0))
        throw PreconditionError("first code must contain the zero word");
    std::uint32_t mask = n == 32 ? ~0u : ((1u << n) - 1);
    for (std::uint32_t cw : c.words())
        for (std::uint32_t bw : b.words())
            if (std::popcount(cw & (mask ^ bw)) & 1)
                throw PreconditionError("incompatible pair: c=" + std::to_string(cw) +
                                        " meets the complement of b=" + std::to_string(bw) +
                                        " in an odd number of places");

    Lattice base = d_lattice(n).scaled(QSqrt2(16)).renamed("4D" + std::to_string(n));
    SMat binv = inverse(*base.basis());

    std::vector<std::vector<QSqrt2>> offsets;
    offsets.reserve(b.size() + c.size());
    for (std::uint32_t bw : b.words())
        offsets.push_back(row_times(code_word_offset(bw, n, 2), binv));
    for (std::uint32_t cw : c.words()) {
        std::vector<QSqrt2> amb = code_word_offset(cw, n, 2);
        for (auto& x : amb) x += QSqrt2(1);
        amb[0] += QSqrt2(4);
        offsets.push_back(row_times(amb, binv));
    }
    if (name.empty()) name = "B*(" + std::to_string(n) + ")";
    return PeriodicPacking::make(std::move(name), std::move(base), std::move(offsets));
}

bool bstar_member(const BinaryCode& b, const BinaryCode& c,
                  const std::vector<long long>& point) {
    if (b.length() != c.length())
        throw PreconditionError("codes have different lengths");
    int n = b.length();
    if (static_cast<int>(point.size()) != n)
        throw PreconditionError("point has the wrong dimension");

    bool even = point[0] % 2 == 0;
    for (long long p : point)
        if ((p % 2 == 0) != even) return false;

    std::uint32_t word = 0;
    long long parity = 0;
    for (int i = 0; i < n; ++i) {
        long long q = even ? point[i] : point[i] - 1;
        long long bit = ((q / 2) % 2 + 2) % 2;
        word |= static_cast<std::uint32_t>(bit) << i;
        parity += (q - 2 * bit) / 4;
    }
    if (even) return b.contains(word) && parity % 2 == 0;
    return c.contains(word) && ((parity % 2) + 2) % 2 == 1;
}

PeriodicPacking d_plus(int n) {
    if (n < 3) throw PreconditionError("d_plus needs n >= 3");
    Lattice base = d_lattice(n);
    SMat binv = inverse(*base.basis());
    std::vector<QSqrt2> half(n, QSqrt2(Rational(1, 2)));
    std::vector<std::vector<QSqrt2>> offsets;
    offsets.push_back(std::vector<QSqrt2>(n, QSqrt2(0)));
    offsets.push_back(row_times(half, binv));
    return PeriodicPacking::make("D" + std::to_string(n) + "+", std::move(base),
                                 std::move(offsets));
}

PeriodicPacking d9_theta_plus(const Rational& theta) {
    Lattice base = d_lattice(9);
    SMat binv = inverse(*base.basis());
    std::vector<QSqrt2> amb(9, QSqrt2(Rational(1, 2)));
    amb[8] = QSqrt2(theta / 2);
    std::vector<std::vector<QSqrt2>> offsets;
    offsets.push_back(std::vector<QSqrt2>(9, QSqrt2(0)));
    offsets.push_back(row_times(amb, binv));
    return PeriodicPacking::make("D9+(theta=" + format_scalar(QSqrt2(theta)) + ")",
                                 std::move(base), std::move(offsets));
}

Lattice stack_layer(const Lattice& l, const std::vector<QSqrt2>& hole,
                    const QSqrt2& target_norm, const EnumOptions& opts) {
    if (static_cast<int>(hole.size()) != l.dim())
        throw PreconditionError("hole has the wrong dimension");
    CosetMinimum cm = coset_minimum(l, hole, opts);
    if (!(cm.norm < target_norm))
        throw PreconditionError("hole at squared distance " + format_scalar(cm.norm) +
                                " cannot support layer norm " + format_scalar(target_norm));
    QSqrt2 s2 = target_norm - cm.norm;
    std::optional<QSqrt2> s = qsqrt2_sqrt(s2);
    if (!s)
        throw RepresentationError("layer height sqrt(" + format_scalar(s2) +
                                  ") does not exist in Q(sqrt2)");

    int n = l.dim();
    std::string name = l.name() + "+layer";
    if (l.basis()) {
        const SMat& b = *l.basis();
        SMat nb(n + 1, b.cols() + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < b.cols(); ++j) nb.at(i, j) = b.at(i, j);
        std::vector<QSqrt2> amb = row_times(hole, b);
        for (int j = 0; j < b.cols(); ++j) nb.at(n, j) = amb[j];
        nb.at(n, b.cols()) = *s;
        return Lattice::from_basis(std::move(name), std::move(nb));
    }
    SMat g(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = l.gram().at(i, j);
    for (int i = 0; i < n; ++i) {
        QSqrt2 s_i(0);
        for (int j = 0; j < n; ++j) s_i += l.gram().at(i, j) * hole[j];
        g.at(i, n) = s_i;
        g.at(n, i) = s_i;
    }
    g.at(n, n) = quadratic_value(l.gram(), hole) + s2;
    return Lattice::from_gram(std::move(name), std::move(g));
}

double fig3_ordinate(int dim, double center_density) {
    return std::log2(center_density) + dim * (24.0 - dim) / 96.0;
}

double fig3_ordinate(const Lattice& l, const EnumOptions& opts) {
    return fig3_ordinate(l.dim(), density_info(l, opts).center_density);
}

double fig3_ordinate(const PeriodicPacking& p, const EnumOptions& opts) {
    return fig3_ordinate(p.dim(), packing_invariants(p, opts).center_density);
}

HoleCandidate hole_search(const Lattice& l, int restarts, std::uint64_t seed,
                          const EnumOptions& opts) {
    if (restarts < 1) throw PreconditionError("hole_search needs at least one restart");
    int n = l.dim();
    auto dist_sq = [&](const std::vector<Rational>& pt) {
        return coset_minimum(l, to_scalar_vector(pt), opts).norm;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> start(0, 7);
    HoleCandidate best{std::vector<Rational>(n, 0), QSqrt2(0)};
    for (int r = 0; r < restarts; ++r) {
        std::vector<Rational> pt(n);
        for (auto& x : pt) x = Rational(start(rng), 8);
        QSqrt2 cur = dist_sq(pt);
        for (int denom = 8; denom <= 64; denom *= 2) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (int i = 0; i < n; ++i)
                    for (int sgn : {1, -1}) {
                        std::vector<Rational> trial = pt;
                        trial[i] += Rational(sgn, denom);
                        QSqrt2 d = dist_sq(trial);
                        if (cur < d) {
                            cur = d;
                            pt = std::move(trial);
                            improved = true;
                        }
                    }
            }
        }
        if (best.dist_sq < cur) best = {std::move(pt), cur};
    }
    return best;
}

} // namespace latpack
