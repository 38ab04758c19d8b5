#include "latpack/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "latpack/catalog.hpp"
#include "latpack/isometry.hpp"

namespace latpack {

namespace {

int mod2(const Int& x) { return static_cast<int>(((x % 2) + 2) % 2); }

int diag_parity(const SMat& g, int i) { return mod2(num(g.at(i, i).rat)); }

// Solves G c = diag(G) over F2.  G has odd determinant for unimodular
// lattices, so the solution is unique; c/2 generates the shadow coset.
std::vector<int> parity_coords(const SMat& g) {
    int n = g.rows();
    std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = mod2(num(g.at(i, j).rat));
        a[i][n] = diag_parity(g, i);
    }
    for (int col = 0, row = 0; col < n; ++col, ++row) {
        int p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw PreconditionError("Gram matrix is singular mod 2");
        std::swap(a[row], a[p]);
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            for (int j = col; j <= n; ++j) a[i][j] ^= a[row][j];
        }
    }
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = a[i][n];
    return c;
}

} // namespace

EvenSublattice even_sublattice(const Lattice& l) {
    if (!l.is_integral())
        throw PreconditionError("even sublattice needs an integral lattice");
    if (l.is_even()) return {l, true};
    const SMat& g = l.gram();
    int n = g.rows();
    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
        if (diag_parity(g, i)) pivot = i;
    // Kernel of the norm-parity functional: double the pivot row and absorb
    // it into every other odd-norm row.
    IMat t = IMat::identity(n);
    t.at(pivot, pivot) = 2;
    for (int i = 0; i < n; ++i)
        if (i != pivot && diag_parity(g, i)) t.at(i, pivot) = 1;
    SMat ts = t.to_smat();
    LllResult red = lll_reduce_gram(ts * g * ts.transpose());
    std::string name = "even(" + l.name() + ")";
    if (l.basis()) {
        SMat b = (red.u * t).to_smat() * *l.basis();
        return {Lattice::from_basis(std::move(name), std::move(b)), false};
    }
    return {Lattice::from_gram(std::move(name), std::move(red.gram)), false};
}

ShadowDescription shadow(const Lattice& l, const Rational& cutoff,
                         const EnumOptions& opts) {
    if (!l.is_unimodular()) throw PreconditionError("shadow needs a unimodular lattice");
    if (cutoff <= 0) throw PreconditionError("shadow cutoff must be positive");
    int n = l.dim();
    if (l.is_even())
        return {l, std::vector<Rational>(n, 0), theta_series(l, cutoff, opts)};
    std::vector<int> c = parity_coords(l.gram());
    std::vector<Rational> rep(n);
    std::vector<QSqrt2> shift(n);
    for (int i = 0; i < n; ++i) {
        rep[i] = Rational(c[i], 2);
        shift[i] = QSqrt2(rep[i]);
    }
    QSeries s;
    s.set_cutoff(cutoff);
    for (const auto& [nrm, cnt] : coset_norm_counts(l, shift, QSqrt2(cutoff), opts))
        s.add_term(nrm.rat, Rational(cnt));
    return {l, std::move(rep), std::move(s)};
}

QSeries theta_z(const Rational& cutoff) {
    if (cutoff <= 0) throw PreconditionError("theta cutoff must be positive");
    QSeries s;
    s.set_cutoff(cutoff);
    s.add_term(0, 1);
    for (Int m = 1; Rational(m * m) < cutoff; ++m) s.add_term(Rational(m * m), 2);
    return s;
}

QSeries theta_z_shadow(const Rational& cutoff) {
    if (cutoff <= 0) throw PreconditionError("theta cutoff must be positive");
    QSeries s;
    s.set_cutoff(cutoff);
    for (Int m = 0;; ++m) {
        Rational e(Int((2 * m + 1) * (2 * m + 1)), Int(4));
        if (e >= cutoff) break;
        s.add_term(e, 2);
    }
    return s;
}

namespace {

QSeries cached_catalog_theta(const char* name, QSeries& cache, std::mutex& mu,
                             const Rational& cutoff, const EnumOptions& opts) {
    std::scoped_lock lock(mu);
    if (!cache.cutoff() || *cache.cutoff() < cutoff)
        cache = theta_series(catalog_lattice(name), cutoff, opts);
    return cache.truncated(cutoff);
}

} // namespace

QSeries theta_e8(const Rational& cutoff, const EnumOptions& opts) {
    static std::mutex mu;
    static QSeries cache;
    return cached_catalog_theta("E8", cache, mu, cutoff, opts);
}

QSeries theta_leech(const Rational& cutoff, const EnumOptions& opts) {
    static std::mutex mu;
    static QSeries cache;
    return cached_catalog_theta("Leech", cache, mu, cutoff, opts);
}

namespace {

std::vector<QSeries> ring_basis(int n, bool even, const Rational& cutoff,
                                const EnumOptions& opts) {
    std::vector<QSeries> f;
    if (!even) {
        QSeries tz = theta_z(cutoff);
        QSeries te = theta_e8(cutoff, opts);
        for (int j = 0; 8 * j <= n; ++j)
            f.push_back(tz.pow(unsigned(n - 8 * j)) * te.pow(unsigned(j)));
    } else {
        QSeries te = theta_e8(cutoff, opts);
        for (int j = 0; 24 * j <= n; ++j) {
            QSeries g = te.pow(unsigned((n - 24 * j) / 8));
            if (j > 0) g = g * theta_leech(cutoff, opts).pow(unsigned(j));
            f.push_back(std::move(g));
        }
    }
    return f;
}

// Exact Gaussian elimination on an s x (s+1) augmented system.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a) {
    int s = static_cast<int>(a.size());
    for (int col = 0; col < s; ++col) {
        int p = col;
        while (p < s && a[p][col] == 0) ++p;
        if (p == s) throw ConstructionError("theta ring system is degenerate");
        std::swap(a[col], a[p]);
        for (int i = 0; i < s; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (int j = col; j <= s; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> x(s);
    for (int i = 0; i < s; ++i) x[i] = a[i][s] / a[i][i];
    return x;
}

} // namespace

RingExpression express_theta_unimodular(const QSeries& prefix, int n, bool even) {
    if (n < 1) throw PreconditionError("dimension must be positive");
    if (even && n % 8 != 0)
        throw PreconditionError("even unimodular lattices need dimension divisible by 8");
    for (const auto& [e, c] : prefix.terms())
        if (!is_integer(e))
            throw ConstructionError("not a unimodular theta prefix: term at q^" +
                                    format_rational(e));
    int unknowns = (even ? n / 24 : n / 8) + 1;
    int need = even ? 2 * (n / 24 + 1) : n / 8;  // highest order that must be known
    if (prefix.cutoff() && *prefix.cutoff() <= need)
        throw PreconditionError("theta prefix too short: need orders through q^" +
                                std::to_string(need));
    if (prefix.coefficient(0) != 1)
        throw ConstructionError("not a unimodular theta prefix: constant term is " +
                                format_rational(prefix.coefficient(0)));

    // Verify against everything the prefix knows, within a sane window.
    Rational vc(need + 9);
    if (prefix.cutoff())
        vc = std::min(vc, *prefix.cutoff());
    else if (!prefix.terms().empty())
        vc = std::min(vc, Rational(floor_int(prefix.terms().rbegin()->first) + 1));
    vc = std::max(vc, Rational(need + 1));

    std::vector<QSeries> f = ring_basis(n, even, vc, {});
    std::vector<std::vector<Rational>> sys(unknowns,
                                           std::vector<Rational>(unknowns + 1));
    for (int i = 0; i < unknowns; ++i) {
        Rational order(even ? 2 * i : i);
        for (int j = 0; j < unknowns; ++j) sys[i][j] = f[j].coefficient(order);
        sys[i][unknowns] = prefix.coefficient(order);
    }
    RingExpression expr{n, even, solve_square(std::move(sys))};

    QSeries recon;
    recon.set_cutoff(vc);
    for (int j = 0; j < unknowns; ++j)
        recon = recon + f[j].scaled(expr.coeffs[j]).truncated(vc);
    for (Int k = 0; Rational(k) < vc; ++k) {
        Rational got = recon.coefficient(Rational(k));
        Rational want = prefix.coefficient(Rational(k));
        if (got != want)
            throw ConstructionError("not a unimodular theta prefix: coefficient at q^" +
                                    format_rational(Rational(k)) + " is " +
                                    format_rational(want) + " but the ring forces " +
                                    format_rational(got));
    }
    return expr;
}

QSeries reconstruct_theta(const RingExpression& expr, const Rational& cutoff,
                          const EnumOptions& opts) {
    if (expr.n < 1 ||
        expr.coeffs.size() != std::size_t((expr.even ? expr.n / 24 : expr.n / 8) + 1))
        throw PreconditionError("malformed ring expression");
    std::vector<QSeries> f = ring_basis(expr.n, expr.even, cutoff, opts);
    QSeries out;
    out.set_cutoff(cutoff);
    for (std::size_t j = 0; j < f.size(); ++j)
        out = out + f[j].scaled(expr.coeffs[j]);
    return out;
}

QSeries shadow_theta_from_ring(const RingExpression& expr, const Rational& cutoff,
                               const EnumOptions& opts) {
    if (expr.even)
        throw PreconditionError("shadow substitution applies to the odd-case basis");
    if (expr.n < 1 || expr.coeffs.size() != std::size_t(expr.n / 8 + 1))
        throw PreconditionError("malformed ring expression");
    QSeries ts = theta_z_shadow(cutoff);
    QSeries te = theta_e8(cutoff, opts);
    QSeries out;
    out.set_cutoff(cutoff);
    for (int j = 0; j * 8 <= expr.n; ++j) {
        QSeries term = ts.pow(unsigned(expr.n - 8 * j)) * te.pow(unsigned(j));
        out = out + term.scaled(expr.coeffs[j]);
    }
    return out;
}

NonexistenceCertificate nonexistence_certificate(int n, int mu,
                                                 const Rational& check_cutoff,
                                                 const EnumOptions& opts) {
    if (n < 1 || n > 48)
        throw PreconditionError("dimension must lie in 1..48");
    if (mu < 1) throw PreconditionError("minimal norm must be at least 1");
    if (check_cutoff <= 0) throw PreconditionError("check cutoff must be positive");
    int m = n / 8;
    NonexistenceCertificate out;
    if (mu - 1 < m) {
        out.free_parameters = m - (mu - 1);
        out.reason = "theta coefficients above q^" + std::to_string(mu - 1) +
                     " are unconstrained: " + std::to_string(out.free_parameters) +
                     " free parameter(s) remain";
        return out;
    }
    QSeries prefix;
    prefix.set_cutoff(Rational(m + 1));
    prefix.add_term(0, 1);
    RingExpression expr = express_theta_unimodular(prefix, n, false);
    Rational cc = std::max(check_cutoff, Rational(mu + 1));
    out.expr = expr;
    out.theta = reconstruct_theta(expr, cc, opts);
    out.shadow_series = shadow_theta_from_ring(expr, cc, opts);

    auto flag = [&out](const std::string& what, const Rational& e, const Rational& c,
                       const std::string& why) {
        out.verdict = NonexistenceCertificate::Verdict::impossible;
        out.offending = {e, c};
        out.reason = what + " coefficient " + format_rational(c) + " at q^" +
                     format_rational(e) + " " + why;
    };
    for (int k = 1; k < mu; ++k) {
        Rational c = out.theta.coefficient(k);
        if (c != 0) {
            flag("theta", k, c,
                 "must vanish for minimal norm " + std::to_string(mu));
            return out;
        }
    }
    for (const auto& [e, c] : out.theta.terms())
        if (c < 0 || !is_integer(c)) {
            flag("theta", e, c, "is not a nonnegative integer");
            return out;
        }
    for (const auto& [e, c] : out.shadow_series.terms())
        if (c < 0 || !is_integer(c)) {
            flag("shadow", e, c, "is not a nonnegative integer");
            return out;
        }
    out.reason = "no obstruction below q^" + format_rational(cc);
    return out;
}

int legacy_bound(int n) {
    if (n < 1) throw PreconditionError("dimension must be positive");
    return n / 8 + 1;
}

int extremal_bound(int n, bool even) {
    if (n < 1) throw PreconditionError("dimension must be positive");
    if (!even && n == 23) return 3;  // the odd 23-dimensional exception
    return 2 * (n / 24) + 2;
}

bool is_extremal(const Lattice& l, const EnumOptions& opts) {
    if (!l.is_unimodular())
        throw PreconditionError("extremality is defined for unimodular lattices");
    return min_norm(l, opts) == QSqrt2(extremal_bound(l.dim(), l.is_even()));
}

std::optional<IMat> n_modular_check(const Lattice& l, const Int& n_scale,
                                    const EnumOptions& opts) {
    if (!l.is_integral())
        throw PreconditionError("modularity check needs an integral lattice");
    if (n_scale <= 0) throw PreconditionError("the norm multiplier must be positive");
    SMat resc = inverse(l.gram()).scaled(QSqrt2(Rational(n_scale)));
    // An integer witness would conjugate G into N*G^-1, so the latter must be
    // an integer matrix for one to exist.
    if (!resc.is_integral()) return std::nullopt;
    Lattice rd = Lattice::from_gram(l.name() + " rescaled dual", std::move(resc));
    return find_isometry(l, rd, opts);
}

bool isodual_check(const Lattice& l, const EnumOptions& opts) {
    if (l.determinant() != QSqrt2(1))
        throw RepresentationError("isodual check supports determinant 1 only");
    return isometry_equivalent(l.dual(), l, opts);
}

double shadow_transform_check(const Lattice& l,
                              const std::vector<std::complex<double>>& z_samples,
                              const Rational& cutoff, double target,
                              const EnumOptions& opts) {
    using cd = std::complex<double>;
    if (!l.is_unimodular())
        throw PreconditionError("transform check needs a unimodular lattice");
    if (z_samples.empty()) throw PreconditionError("need at least one sample point");
    if (!(target > 0)) throw PreconditionError("target must be positive");
    const double pi = std::acos(-1.0);
    const int n = l.dim();

    // Worst |q| across both sides of the identity.
    double xmax = 0;
    for (cd z : z_samples) {
        if (!(z.imag() >= 1.0)) throw PreconditionError("samples need Im z >= 1");
        cd w = 1.0 - 1.0 / z;
        xmax = std::max({xmax, std::exp(-pi * z.imag()), std::exp(-pi * w.imag())});
    }

    // Coefficients of an n-dim unimodular theta (or shadow) are bounded by the
    // sphere-packing count (2 sqrt(k) + 1)^n, so the truncation error past
    // order K is at most sum_{k >= K} (2 sqrt(k) + 1)^n xmax^k.  Consecutive
    // terms of that majorant shrink by at least ((k+1)/k)^(n/2) * xmax.
    auto tail_bound = [&](long long k0) -> double {
        double total = 0;
        double term = std::pow(2 * std::sqrt(double(k0)) + 1.0, n) *
                      std::pow(xmax, double(k0));
        for (long long k = k0; k < k0 + 100000; ++k) {
            total += term;
            if (!(total < 1e300)) break;
            double q = std::pow(double(k + 1) / double(k), n * 0.5) * xmax;
            if (q < 0.999) return total + term * q / (1.0 - q);
            term *= q;
        }
        return std::numeric_limits<double>::infinity();
    };

    const double budget = target / 10;  // headroom for summation roundoff
    long long k_cut;
    if (cutoff == 0) {
        k_cut = 8;
        while (k_cut <= 4096 && !(tail_bound(k_cut) < budget)) ++k_cut;
        if (k_cut > 4096)
            throw PrecisionError("cannot certify the target deviation at these samples");
    } else {
        if (cutoff < 8) throw PreconditionError("series cutoff must be at least 8");
        k_cut = static_cast<long long>(floor_int(cutoff));
        if (!(tail_bound(k_cut) < budget))
            throw PrecisionError("series cutoff too small for the target deviation");
    }

    QSeries th = theta_series(l, Rational(k_cut), opts);
    QSeries sh = l.is_even() ? th : shadow(l, Rational(k_cut), opts).series;

    double dev = 0;
    for (cd z : z_samples) {
        cd lhs = 0;
        for (const auto& [e, c] : sh.terms())
            lhs += to_double(c) * std::exp(cd(0, 1) * pi * z * to_double(e));
        cd w = 1.0 - 1.0 / z;
        cd rhs = 0;
        for (const auto& [e, c] : th.terms())
            rhs += to_double(c) * std::exp(cd(0, 1) * pi * w * to_double(e));
        cd base = std::exp(cd(0, 1) * (pi / 4.0)) / std::sqrt(z);
        for (int i = 0; i < n; ++i) rhs *= base;
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return dev;
}

} // namespace latpack
