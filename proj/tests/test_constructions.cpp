#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "latpack/constructions.hpp"

using namespace latpack;
using namespace latpack::testing;

namespace {

// All members of the B* point set with squared norm in (0, radius^2],
// found by scanning the box |x_i| <= radius.  Independent of the coset
// representation.
std::map<long long, std::uint64_t> bstar_box_counts(const BinaryCode& b,
                                                    const BinaryCode& c,
                                                    long long radius) {
    int n = b.length();
    std::map<long long, std::uint64_t> out;
    std::vector<long long> x(n, -radius);
    while (true) {
        long long norm = 0;
        for (long long v : x) norm += v * v;
        if (norm > 0 && norm <= radius * radius && bstar_member(b, c, x)) ++out[norm];
        int i = 0;
        while (i < n && x[i] == radius) x[i++] = -radius;
        if (i == n) break;
        ++x[i];
    }
    return out;
}

// The same buckets from the packing's cosets, up to the given bound.
std::map<long long, std::uint64_t> bstar_coset_counts(const PeriodicPacking& p,
                                                      long long bound) {
    std::map<long long, std::uint64_t> out;
    for (const auto& off : p.offsets())
        for (const auto& [norm, cnt] : coset_norm_counts(p.base(), off, QSqrt2(bound))) {
            if (norm == QSqrt2(0)) continue;
            CHECK(norm.rad == 0);
            CHECK(denominator(norm.rat) == 1);
            out[static_cast<long long>(numerator(norm.rat))] += cnt;
        }
    return out;
}

} // namespace

TEST_CASE("integer and checkerboard bases") {
    CHECK(z_n(1).name() == "Z");
    CHECK(z_n(3).gram() == SMat::identity(3));
    CHECK_THROWS_AS(z_n(0), PreconditionError);

    CHECK(d_lattice(2).determinant() == QSqrt2(4));
    CHECK_THROWS_AS(d_lattice(1), PreconditionError);
    Lattice d = d_lattice(4);
    CHECK(d.determinant() == QSqrt2(4));
    CHECK(min_norm(d) == QSqrt2(2));
    CHECK(kissing_number(d) == 24);
    CHECK(isometry_equivalent(d, d4()));
}

TEST_CASE("construction A of the repetition code is body-centred") {
    BinaryCode rep = BinaryCode::from_generators(3, {0b111});
    PackingInvariants pi = packing_invariants(construction_a(rep));
    CHECK(pi.cosets == 2);
    CHECK(pi.min_dist_sq == QSqrt2(3));
    CHECK(pi.max_touching == 8);
    CHECK(pi.center_density_sq == density_info(bcc()).center_density_sq);
}

TEST_CASE("construction A of the even-weight code is the checkerboard") {
    BinaryCode even = BinaryCode::from_generators(4, {0b0011, 0b0110, 0b1100});
    Lattice l = construction_a_lattice(even);
    CHECK(l.determinant() == QSqrt2(4));
    CHECK(isometry_equivalent(l, d_lattice(4)));
}

TEST_CASE("only closed point sets become lattices") {
    BinaryCode nonlin = BinaryCode::from_words(3, {0b000, 0b011, 0b101});
    CHECK_THROWS_AS(construction_a_lattice(nonlin), PreconditionError);
    // The translated best 10-dimensional code is nonlinear, so its point
    // set is not closed under addition.
    CHECK_THROWS_AS(packing_to_lattice(construction_a(best10())), ConstructionError);
}

TEST_CASE("the record 10-dimensional packing") {
    PeriodicPacking p = construction_a(best10(), "P10c");
    PackingInvariants pi = packing_invariants(p);
    CHECK(pi.cosets == 40);
    CHECK(pi.min_dist_sq == QSqrt2(4));
    CHECK(pi.center_density_sq == QSqrt2(Rational(25, 16384)));
    CHECK(pi.center_density == doctest::Approx(5.0 / 128).epsilon(1e-12));

    // Contacts per class: 20 from the doubled integer lattice plus 16 per
    // codeword at Hamming distance four.
    BinaryCode c = best10();
    std::uint64_t most = 0;
    for (std::uint32_t w : c.words()) {
        std::uint64_t near = 0;
        for (std::uint32_t v : c.words())
            if (std::popcount(v ^ w) == 4) ++near;
        most = std::max(most, 20 + 16 * near);
    }
    CHECK(pi.max_touching == most);
    CHECK(pi.max_touching == 372);
}

TEST_CASE("construction B keeps even sums") {
    // Even-weight code in length 4: index 2 below construction A.
    BinaryCode even = BinaryCode::from_generators(4, {0b0011, 0b0110, 0b1100});
    Lattice l = construction_b(even);
    CHECK(l.determinant() == QSqrt2(16));
    CHECK(l.is_even());
    CHECK(min_norm(l) == QSqrt2(2));
    CHECK(kissing_number(l) == 12);

    // Odd codeword weights break the parity split.
    BinaryCode rep3 = BinaryCode::from_generators(3, {0b111});
    CHECK_THROWS_AS(construction_b(rep3), PreconditionError);
}

TEST_CASE("construction A of the golay code") {
    Lattice l = construction_a_lattice(golay24());
    CHECK(l.determinant() == QSqrt2(Rational(Int(1) << 24)));
    CHECK(l.is_even());
    CHECK(min_norm(l) == QSqrt2(4));
    CHECK(kissing_number(l) == 48);
}

TEST_CASE("leech lattice from the golay code") {
    Lattice l = leech_from_golay();
    CHECK(l.dim() == 24);
    CHECK(l.is_unimodular());
    CHECK(l.is_even());
    CHECK(min_norm(l) == QSqrt2(4));
}

TEST_CASE("lorentzian vectors") {
    LorentzianVector w;
    w.x.resize(26);
    for (int i = 0; i < 25; ++i) w.x[i] = i;
    w.x[25] = 70;
    CHECK(lorentz_product(w, w) == 0);
    CHECK(in_even_lorentzian(w));

    LorentzianVector t;
    t.x.assign(26, Rational(1, 2));
    CHECK(in_even_lorentzian(t));
    CHECK(lorentz_product(t, t) == 6);
    t.x[3] = 1;  // mixed integral and half-integral
    CHECK(!in_even_lorentzian(t));

    LorentzianVector u;
    u.x.assign(26, 0);
    u.x[25] = 1;  // odd column sum
    CHECK(!in_even_lorentzian(u));
    u.x[25] = 2;
    CHECK(in_even_lorentzian(u));
    CHECK(lorentz_product(u, u) == -4);
}

TEST_CASE("the two leech constructions agree") {
    Lattice a = leech_from_golay();
    Lattice b = leech_from_lorentzian();
    CHECK(b.is_unimodular());
    CHECK(b.is_even());
    CHECK(theta_series(a, 4).terms() == theta_series(b, 4).terms());
}

TEST_CASE("construction B* rejects incompatible codes") {
    BinaryCode even = BinaryCode::from_generators(4, {0b0011, 0b0110, 0b1100});
    BinaryCode rep = BinaryCode::from_generators(4, {0b1111});
    CHECK_NOTHROW(construction_bstar(even, rep));
    // The condition is one-sided: an odd-weight word is fine in the first
    // slot but meets the complement of the zero word oddly in the second.
    BinaryCode zero = BinaryCode::from_words(4, {0});
    BinaryCode odd1 = BinaryCode::from_generators(4, {0b0001});
    CHECK_NOTHROW(construction_bstar(odd1, zero));
    CHECK_THROWS_AS(construction_bstar(zero, odd1), PreconditionError);
    CHECK_THROWS_AS(construction_bstar(even, BinaryCode::from_generators(5, {0b1})),
                    PreconditionError);
}

TEST_CASE("construction B* seed case against the membership oracle") {
    BinaryCode trivial = BinaryCode::from_words(4, {0});
    PeriodicPacking p = construction_bstar(trivial, trivial);
    CHECK(p.offsets().size() == 2);
    PackingInvariants pi = packing_invariants(p);
    CHECK(pi.min_dist_sq == QSqrt2(12));
    CHECK(pi.max_touching == 4);

    CHECK(bstar_member(trivial, trivial, {0, 0, 0, 0}));
    CHECK(bstar_member(trivial, trivial, {1, 1, 1, -3}));
    CHECK(!bstar_member(trivial, trivial, {1, 1, 1, 1}));   // even y-sum
    CHECK(bstar_member(trivial, trivial, {4, 4, 0, 0}));
    CHECK(!bstar_member(trivial, trivial, {4, 0, 0, 0}));   // odd y-sum
    CHECK(!bstar_member(trivial, trivial, {2, 2, 0, 0}));   // word outside B
    CHECK(!bstar_member(trivial, trivial, {1, 2, 0, 0}));   // mixed parity

    CHECK(bstar_box_counts(trivial, trivial, 4) == bstar_coset_counts(p, 16));
}

TEST_CASE("construction B* with real codes against the membership oracle") {
    BinaryCode even = BinaryCode::from_generators(4, {0b0011, 0b0110, 0b1100});
    BinaryCode rep = BinaryCode::from_generators(4, {0b1111});
    PeriodicPacking p = construction_bstar(even, rep);
    CHECK(p.offsets().size() == 10);
    CHECK(packing_invariants(p).min_dist_sq == QSqrt2(8));

    CHECK(bstar_box_counts(even, rep, 4) == bstar_coset_counts(p, 16));
}

TEST_CASE("diamond packing and its even-dimensional lattices") {
    PackingInvariants pi = packing_invariants(d_plus(3));
    CHECK(pi.min_dist_sq == QSqrt2(Rational(3, 4)));
    CHECK(pi.max_touching == 4);

    CHECK(isometry_equivalent(packing_to_lattice(d_plus(4)), z_n(4)));
    CHECK_THROWS_AS(packing_to_lattice(d_plus(5)), ConstructionError);

    Lattice d8p = packing_to_lattice(d_plus(8));
    CHECK(d8p.is_unimodular());
    CHECK(d8p.is_even());
    CHECK(isometry_equivalent(d8p, e8()));
}

TEST_CASE("the sliding family keeps its density") {
    for (const char* t : {"0", "1/7", "1/5", "1/3", "1/2", "2/3", "1", "8/5", "22/7", "3"}) {
        PeriodicPacking p = d9_theta_plus(parse_scalar(t).rat);
        PackingInvariants pi = packing_invariants(p);
        CHECK(pi.min_dist_sq == QSqrt2(2));
        CHECK(pi.center_density_sq == QSqrt2(Rational(1, 512)));
    }
    // Only the endpoint has extra contacts across the two classes.
    CHECK(packing_invariants(d9_theta_plus(Rational(0))).max_touching == 272);
    CHECK(packing_invariants(d9_theta_plus(Rational(1, 2))).max_touching == 144);
}

TEST_CASE("stacking layers over deep holes") {
    // Octahedral hole of the checkerboard, basis coordinates (1, 1/2, 1/2).
    Lattice d4s = stack_layer(d_lattice(3), svec({"1", "1/2", "1/2"}), QSqrt2(2));
    CHECK(d4s.determinant() == QSqrt2(4));
    CHECK(min_norm(d4s) == QSqrt2(2));
    CHECK(isometry_equivalent(d4s, d_lattice(4)));

    // Square layers shifted by a half cell, spaced by sqrt(1/2): the
    // face-centred cubic lattice seen along a 4-fold axis.
    Lattice fcc = stack_layer(z_lattice(2), svec({"1/2", "1/2"}), QSqrt2(1));
    CHECK(fcc.determinant() == QSqrt2(Rational(1, 2)));
    CHECK(isometry_equivalent(fcc.scaled(QSqrt2(2)), d_lattice(3)));

    CHECK_THROWS_AS(stack_layer(d_lattice(3), svec({"1", "1/2", "1/2"}), QSqrt2(1)),
                    PreconditionError);
    CHECK_THROWS_AS(stack_layer(z_lattice(2), svec({"1/2", "1/2"}), QSqrt2(2)),
                    RepresentationError);
    CHECK_THROWS_AS(stack_layer(z_lattice(2), svec({"1/2"}), QSqrt2(1)),
                    PreconditionError);
}

TEST_CASE("figure-of-merit ordinate") {
    CHECK(fig3_ordinate(24, 1.0) == doctest::Approx(0.0));
    CHECK(fig3_ordinate(z_n(1)) == doctest::Approx(-0.760417).epsilon(1e-5));
    CHECK(fig3_ordinate(a2()) == doctest::Approx(-1.334146).epsilon(1e-5));
    // Ordinates are scale invariant like the density itself.
    CHECK(fig3_ordinate(d_lattice(4).scaled(QSqrt2(9))) ==
          doctest::Approx(fig3_ordinate(d_lattice(4))));
}

TEST_CASE("hole search finds the square deep hole") {
    HoleCandidate h = hole_search(z_lattice(2), 4, 11);
    CHECK(h.dist_sq == QSqrt2(Rational(1, 2)));
    for (const Rational& c : h.point) CHECK(denominator(Rational(2 * c)) == 1);
}

TEST_CASE("hole search on the checkerboard stays within the covering radius") {
    HoleCandidate h = hole_search(d_lattice(3), 6, 5);
    CHECK(h.dist_sq >= QSqrt2(Rational(3, 4)));
    CHECK(h.dist_sq <= QSqrt2(1));
}
