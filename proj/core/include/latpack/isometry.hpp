#pragma once

#include <optional>

#include "latpack/enumerate.hpp"

namespace latpack {

// Searches for an integer change of basis U with U G2 U^T = G1, i.e. an
// isometry from l1 onto l2.  Row i of U gives the coordinates in l2 of the
// image of the i-th basis vector of l1.  Cheap invariants (determinant,
// minimal norm, kissing number) are compared first; failure on any of them
// short-circuits to nullopt.
std::optional<IMat> find_isometry(const Lattice& l1, const Lattice& l2,
                                  const EnumOptions& opts = {});

bool isometry_equivalent(const Lattice& l1, const Lattice& l2,
                         const EnumOptions& opts = {});

} // namespace latpack
