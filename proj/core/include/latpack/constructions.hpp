#pragma once

#include "latpack/codes.hpp"
#include "latpack/isometry.hpp"
#include "latpack/packing.hpp"

namespace latpack {

// Z^n and the even-coordinate-sum lattice D_n, with explicit bases.
Lattice z_n(int n);
Lattice d_lattice(int n);

// P(C) = {x in Z^n : x mod 2 in C}: base lattice 2Z^n with the codewords
// as offsets.  Codes without the zero word are translated onto it first,
// which changes nothing about distances.
PeriodicPacking construction_a(const BinaryCode& c, std::string name = "");

// The same point set as a lattice; requires a linear code.
Lattice construction_a_lattice(const BinaryCode& c, std::string name = "");

// Converts a packing whose point set happens to be closed under addition
// into a lattice; throws ConstructionError when it is not closed.  The
// base lattice must carry a rational basis.
Lattice packing_to_lattice(const PeriodicPacking& p, std::string name = "");

// B(C) = {x in Z^n : x mod 2 in C, sum(x) = 0 mod 4}; requires a linear
// code with even codeword weights.
Lattice construction_b(const BinaryCode& c, std::string name = "");

// The Leech lattice from the Golay code: span of the sum-divisible-by-4
// sublattice of P(golay) and the glue vector (-3/2, (1/2)^23), rescaled
// so the minimum is 4 and the determinant 1.
Lattice leech_from_golay();

// Vector in R^{25,1}; x[0..24] are spacelike, x[25] timelike.
struct LorentzianVector {
    std::vector<Rational> x;
};

// Inner product with signature (25, 1).
Rational lorentz_product(const LorentzianVector& a, const LorentzianVector& b);

// Membership in the even unimodular Lorentzian lattice: all coordinates
// integral or all half-integral, and x_0 + ... + x_24 - x_25 even.
bool in_even_lorentzian(const LorentzianVector& v);

// The Leech lattice as w-perp/w inside the even Lorentzian lattice, for
// the isotropic Weyl vector w = (0, 1, ..., 24 | 70).
Lattice leech_from_lorentzian();

// Two-parity-class point set {2b + 4x : sum(x) even} u {1 + 2c + 4y :
// sum(y) odd} over codeword pairs with c.(1+b) = 0; base lattice 4*D_n.
PeriodicPacking construction_bstar(const BinaryCode& b, const BinaryCode& c,
                                   std::string name = "");

// Direct membership test for the point set above; ground truth for the
// coset representation.
bool bstar_member(const BinaryCode& b, const BinaryCode& c,
                  const std::vector<long long>& point);

// D_n together with the deep-hole translate (1/2)^n; a lattice exactly
// when n is even.
PeriodicPacking d_plus(int n);

// The sliding family D9 u D9 + ((1/2)^8, theta/2).
PeriodicPacking d9_theta_plus(const Rational& theta);

// Extends an (n-1)-dimensional lattice by one layer: keeps the old basis
// in the hyperplane and adds a row over the given hole at height s with
// h^2 + s^2 = target_norm, h^2 the squared distance from the hole (in
// basis coordinates) to the lattice.
Lattice stack_layer(const Lattice& l, const std::vector<QSqrt2>& hole,
                    const QSqrt2& target_norm, const EnumOptions& opts = {});

// log2(center density) + n(24-n)/96.
double fig3_ordinate(int dim, double center_density);
double fig3_ordinate(const Lattice& l, const EnumOptions& opts = {});
double fig3_ordinate(const PeriodicPacking& p, const EnumOptions& opts = {});

struct HoleCandidate {
    std::vector<Rational> point;  // basis coordinates
    QSqrt2 dist_sq;
};

// Heuristic deep-hole search by random starts and coordinate descent on
// the distance to the lattice.  Not certifying: the result is a hole
// candidate, not a proven covering-radius witness.
HoleCandidate hole_search(const Lattice& l, int restarts = 8,
                          std::uint64_t seed = 0, const EnumOptions& opts = {});

} // namespace latpack
