#pragma once

#include "latpack/enumerate.hpp"

namespace latpack {

// Union of translates base + offset_k, with offsets given in coordinates of
// the base lattice.  Offsets must be pairwise distinct modulo 1 and one of
// them must be the zero coset.
class PeriodicPacking {
public:
    static PeriodicPacking make(std::string name, Lattice base,
                                std::vector<std::vector<QSqrt2>> offsets);

    // A lattice viewed as a one-class packing.
    static PeriodicPacking from_lattice(Lattice base);

    const std::string& name() const { return name_; }
    const Lattice& base() const { return base_; }
    const std::vector<std::vector<QSqrt2>>& offsets() const { return offsets_; }
    int dim() const { return base_.dim(); }

private:
    PeriodicPacking(std::string name, Lattice base,
                    std::vector<std::vector<QSqrt2>> offsets)
        : name_(std::move(name)), base_(std::move(base)), offsets_(std::move(offsets)) {}
    std::string name_;
    Lattice base_;
    std::vector<std::vector<QSqrt2>> offsets_;
};

struct PackingInvariants {
    QSqrt2 min_dist_sq;        // squared minimal distance between centers
    std::uint64_t max_touching; // largest contact count of any center class
    std::uint64_t cosets;       // translation classes per cell
    QSqrt2 center_density_sq;   // exact square of the center density
    double center_density;
    double density;
};

PackingInvariants packing_invariants(const PeriodicPacking& p,
                                     const EnumOptions& opts = {});

} // namespace latpack
