#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "latpack/lattice.hpp"
#include "latpack/qseries.hpp"

namespace latpack {

struct EnumOptions {
    std::uint64_t node_budget = 1'000'000'000;
    std::uint64_t memory_budget_bytes = std::uint64_t(2) << 30;
};

// A lattice vector given by its integer coordinates in the defining basis,
// together with its exact norm.
struct ShortVector {
    std::vector<long long> coords;
    QSqrt2 norm;
};

// All nonzero vectors with norm <= bound, both signs, sorted by coordinates.
std::vector<ShortVector> short_vectors(const Lattice& l, const QSqrt2& bound,
                                       const EnumOptions& opts = {});

// Counts of nonzero vectors by exact norm, for norms <= bound.
std::map<QSqrt2, std::uint64_t> norm_counts(const Lattice& l, const QSqrt2& bound,
                                            const EnumOptions& opts = {});

// All integer x with (x + shift)^T G (x + shift) <= bound; norms are the
// shifted values.  Coordinates are in the lattice basis.  Shift entries may
// lie anywhere in Q(sqrt2).
std::vector<ShortVector> coset_vectors(const Lattice& l, const std::vector<QSqrt2>& shift,
                                       const QSqrt2& bound, const EnumOptions& opts = {});

std::map<QSqrt2, std::uint64_t> coset_norm_counts(const Lattice& l,
                                                  const std::vector<QSqrt2>& shift,
                                                  const QSqrt2& bound,
                                                  const EnumOptions& opts = {});

// Minimum of (x + shift)^T G (x + shift) over integer x, with multiplicity.
struct CosetMinimum {
    QSqrt2 norm;
    std::uint64_t count = 0;
};
CosetMinimum coset_minimum(const Lattice& l, const std::vector<QSqrt2>& shift,
                           const EnumOptions& opts = {});

// Smallest norm any of the given cosets attains, capped at `cap`, with
// per-coset multiplicities at that norm.  Cosets that stay above the
// result get count 0; if every coset lies above the cap, norm == cap and
// all counts are 0.  The lattice-level reduction is shared across cosets,
// which is what makes packings with many translation classes tractable.
struct JointCosetMinimum {
    QSqrt2 norm;
    std::vector<std::uint64_t> counts;
};
JointCosetMinimum joint_coset_minimum(const Lattice& l,
                                      const std::vector<std::vector<QSqrt2>>& shifts,
                                      const QSqrt2& cap, const EnumOptions& opts = {});

std::vector<QSqrt2> to_scalar_vector(const std::vector<Rational>& v);

QSqrt2 min_norm(const Lattice& l, const EnumOptions& opts = {});
std::uint64_t kissing_number(const Lattice& l, const EnumOptions& opts = {});
std::vector<ShortVector> minimal_vectors(const Lattice& l, const EnumOptions& opts = {});

// Theta series with coefficients counted by exhaustive enumeration; terms
// cover all norms strictly below cutoff.  Requires a rational Gram matrix.
QSeries theta_series(const Lattice& l, const Rational& cutoff, const EnumOptions& opts = {});

// Contact-graph coordination sequence s(0..steps), where neighbors differ
// by a minimal vector.
std::vector<std::uint64_t> coordination_sequence(const Lattice& l, int steps,
                                                 const EnumOptions& opts = {});

struct DensityInfo {
    QSqrt2 min_norm_sq;       // squared minimal distance
    QSqrt2 center_density_sq; // delta^2 = (min/4)^n / det, exact
    double center_density;    // delta
    double density;           // Delta = delta * V_n
};

DensityInfo density_info(const Lattice& l, const EnumOptions& opts = {});

// Volume of the unit ball in dimension n.
double unit_ball_volume(int n);

} // namespace latpack
