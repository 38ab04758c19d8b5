#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "latpack/enumerate.hpp"

namespace latpack {

// Sublattice of even-norm vectors.  For an odd integral lattice this is the
// index-2 kernel of the norm-parity functional; the result is LLL-reduced.
struct EvenSublattice {
    Lattice lattice;
    bool already_even = false;
};
EvenSublattice even_sublattice(const Lattice& l);

// Shadow of a unimodular lattice: the dual of the even sublattice minus the
// lattice itself.  It is a single coset parent + coset_rep, so the series is
// computed by shifted enumeration.  An even lattice is its own shadow.
struct ShadowDescription {
    Lattice parent;
    std::vector<Rational> coset_rep;  // basis coordinates, entries in (1/2)Z
    QSeries series;
};
ShadowDescription shadow(const Lattice& l, const Rational& cutoff = 8,
                         const EnumOptions& opts = {});

// Max deviation over the samples between theta_{S(L)}(z) and
// (e^{i pi/4}/sqrt(z))^n theta_L(1 - 1/z), both sides summed from truncated
// series at q = e^{i pi z}.  With cutoff 0 the truncation point is chosen from
// a tail bound so the reported deviation is reliable to `target`; an explicit
// cutoff whose tail bound misses the target throws PrecisionError.  Samples
// need Im z >= 1.
double shadow_transform_check(const Lattice& l,
                              const std::vector<std::complex<double>>& z_samples,
                              const Rational& cutoff = 0, double target = 1e-9,
                              const EnumOptions& opts = {});

// Theta series of a unimodular lattice written in the graded monomial basis:
// sum_j coeffs[j] * theta_Z^(n-8j) * theta_E8^j for odd lattices, and
// sum_j coeffs[j] * theta_E8^((n-24j)/8) * theta_Leech^j for even ones.
struct RingExpression {
    int n = 0;
    bool even = false;
    std::vector<Rational> coeffs;
};

// Solves the (triangular) linear system matching the prefix; extra known
// coefficients beyond the solving range act as consistency checks and an
// inconsistency throws ConstructionError ("not a unimodular theta prefix").
// Odd case needs the prefix through q^floor(n/8), even case through
// q^(2(floor(n/24)+1)).
RingExpression express_theta_unimodular(const QSeries& theta_prefix, int n, bool even);

QSeries reconstruct_theta(const RingExpression& expr, const Rational& cutoff,
                          const EnumOptions& opts = {});

// Substitutes theta_Z -> theta of Z + 1/2 in an odd-case expression, which
// turns the theta identity into the shadow series.
QSeries shadow_theta_from_ring(const RingExpression& expr, const Rational& cutoff,
                               const EnumOptions& opts = {});

// Reference series.  theta_z/theta_z_shadow are generated directly; the E8
// and Leech series come from catalog enumeration and are cached (the cache
// only ever grows, guarded for concurrent first use).
QSeries theta_z(const Rational& cutoff);
QSeries theta_z_shadow(const Rational& cutoff);
QSeries theta_e8(const Rational& cutoff, const EnumOptions& opts = {});
QSeries theta_leech(const Rational& cutoff, const EnumOptions& opts = {});

// Modular-form obstruction for an odd unimodular lattice of dimension n and
// minimal norm mu: force the theta prefix 1 + 0q + ... + 0q^(mu-1), solve the
// ring system and inspect theta and shadow coefficients.
struct NonexistenceCertificate {
    enum class Verdict { impossible, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
    int free_parameters = 0;             // > 0 when the system is underdetermined
    std::optional<RingExpression> expr;  // present when the system is determined
    QSeries theta;
    QSeries shadow_series;
    // Exponent/coefficient pair witnessing the obstruction, if any.
    std::optional<std::pair<Rational, Rational>> offending;

    bool impossible() const { return verdict == Verdict::impossible; }
};
NonexistenceCertificate nonexistence_certificate(int n, int mu,
                                                 const Rational& check_cutoff = 8,
                                                 const EnumOptions& opts = {});

// Minimal-norm bounds for unimodular lattices: the classical floor(n/8) + 1
// and the shadow-based 2*floor(n/24) + 2, where the odd 23-dimensional case
// allows 3.  is_extremal compares the enumerated minimum against the
// shadow-based bound.
int legacy_bound(int n);
int extremal_bound(int n, bool even);
bool is_extremal(const Lattice& l, const EnumOptions& opts = {});

// Searches for an integer U with U * (N * G^-1) * U^T = G, i.e. a similarity
// onto the dual multiplying norms by N.  Returns the witness or nullopt.
std::optional<IMat> n_modular_check(const Lattice& l, const Int& n_scale,
                                    const EnumOptions& opts = {});

// Dual equivalence within Q(sqrt2); only determinant 1 is supported, where
// no rescaling is needed.
bool isodual_check(const Lattice& l, const EnumOptions& opts = {});

} // namespace latpack
