#include "doctest.h"
#include "fixtures.hpp"
#include "latpack/packing.hpp"

using namespace latpack;
using namespace latpack::testing;

namespace {

Lattice cubic(int n, const char* scale) {
    SMat g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = parse_scalar(scale);
    return Lattice::from_gram("cubic", std::move(g));
}

} // namespace

TEST_CASE("offset validation") {
    Lattice z2 = z_lattice(2);
    CHECK_THROWS_AS(PeriodicPacking::make("empty", z2, {}), PreconditionError);
    CHECK_THROWS_AS(PeriodicPacking::make("short", z2, {svec({"0"})}), PreconditionError);
    // 3/2 and -1/2 are the same coset.
    CHECK_THROWS_AS(PeriodicPacking::make(
                        "dup", z2, {svec({"0", "0"}), svec({"3/2", "0"}), svec({"-1/2", "0"})}),
                    PreconditionError);
    CHECK_THROWS_AS(PeriodicPacking::make("nozero", z2, {svec({"1/2", "1/2"})}),
                    PreconditionError);
}

TEST_CASE("a lattice viewed as a packing keeps its invariants") {
    for (const Lattice& l : {z_lattice(3), a2(), d4(), mcc()}) {
        DensityInfo di = density_info(l);
        PackingInvariants pi = packing_invariants(PeriodicPacking::from_lattice(l));
        CHECK(pi.min_dist_sq == di.min_norm_sq);
        CHECK(pi.max_touching == kissing_number(l));
        CHECK(pi.cosets == 1);
        CHECK(pi.center_density_sq == di.center_density_sq);
        CHECK(pi.density == doctest::Approx(di.density).epsilon(1e-12));
    }
}

TEST_CASE("body-centred cubic as two cosets of a cube") {
    PeriodicPacking p = PeriodicPacking::make(
        "bcc2", cubic(3, "4"), {svec({"0", "0", "0"}), svec({"1/2", "1/2", "1/2"})});
    PackingInvariants pi = packing_invariants(p);
    DensityInfo di = density_info(bcc());
    CHECK(pi.min_dist_sq == QSqrt2(3));
    CHECK(pi.max_touching == 8);
    CHECK(pi.min_dist_sq == di.min_norm_sq);
    CHECK(pi.center_density_sq == di.center_density_sq);
    CHECK(pi.max_touching == kissing_number(bcc()));
}

TEST_CASE("face-centred cubic as four cosets of a cube") {
    PeriodicPacking p = PeriodicPacking::make(
        "fcc4", cubic(3, "4"),
        {svec({"0", "0", "0"}), svec({"1/2", "1/2", "0"}), svec({"1/2", "0", "1/2"}),
         svec({"0", "1/2", "1/2"})});
    PackingInvariants pi = packing_invariants(p);
    DensityInfo di = density_info(d3_from_basis());
    CHECK(pi.min_dist_sq == QSqrt2(2));
    CHECK(pi.max_touching == 12);
    CHECK(pi.center_density_sq == di.center_density_sq);
}

TEST_CASE("irrational offset against the oracle") {
    // One extra center class at (sqrt2/2, 1/2): nearest-center distance is
    // irrational and must come out exactly.
    PeriodicPacking p = PeriodicPacking::make(
        "zsq", z_lattice(2), {svec({"0", "0"}), svec({"1/2*sqrt2", "1/2"})});
    PackingInvariants pi = packing_invariants(p);
    QSqrt2 expect = parse_scalar("7/4-1*sqrt2");
    CHECK(pi.min_dist_sq == expect);
    CHECK(pi.max_touching == 2);

    auto oracle = oracle_counts(z_lattice(2).gram(), expect,
                                svec({"1/2*sqrt2", "1/2"}));
    CHECK(oracle.begin()->first == expect);
    CHECK(oracle.begin()->second == 2);
}
