#include "latpack/packing.hpp"

#include <map>

namespace latpack {

namespace {

Rational frac_part(const Rational& r) { return r - Rational(floor_int(r)); }

// Canonical representative of an offset coordinate modulo 1.  Integer
// translations only touch the rational component.
QSqrt2 reduce_mod_one(const QSqrt2& v) { return {frac_part(v.rat), v.rad}; }

std::string coset_key(const std::vector<QSqrt2>& v) {
    std::string k;
    for (const auto& c : v) {
        k += format_scalar(reduce_mod_one(c));
        k += ';';
    }
    return k;
}

bool is_zero_coset(const std::vector<QSqrt2>& v) {
    for (const auto& c : v)
        if (!reduce_mod_one(c).is_zero()) return false;
    return true;
}

} // namespace

PeriodicPacking PeriodicPacking::make(std::string name, Lattice base,
                                      std::vector<std::vector<QSqrt2>> offsets) {
    if (offsets.empty()) throw PreconditionError("offset list must be nonempty");
    int n = base.dim();
    bool has_zero = false;
    std::map<std::string, int> seen;
    for (const auto& off : offsets) {
        if (static_cast<int>(off.size()) != n)
            throw PreconditionError("offset length does not match lattice dimension");
        if (!seen.emplace(coset_key(off), 1).second)
            throw PreconditionError("offsets must be distinct modulo the lattice");
        has_zero = has_zero || is_zero_coset(off);
    }
    if (!has_zero) throw PreconditionError("offset list must contain the zero coset");
    return PeriodicPacking(std::move(name), std::move(base), std::move(offsets));
}

PeriodicPacking PeriodicPacking::from_lattice(Lattice base) {
    std::vector<std::vector<QSqrt2>> offs(1, std::vector<QSqrt2>(base.dim(), QSqrt2(0)));
    return make(base.name(), std::move(base), std::move(offs));
}

PackingInvariants packing_invariants(const PeriodicPacking& p, const EnumOptions& opts) {
    const Lattice& base = p.base();
    int n = base.dim();
    int k = static_cast<int>(p.offsets().size());

    // Distance structure inside one translation class.
    QSqrt2 base_min = min_norm(base, opts);
    std::uint64_t base_cnt = kissing_number(base, opts);

    // Deduplicate pairwise offset differences modulo the lattice; d and -d
    // share their distance profile.  With linear offset families many pairs
    // collapse onto one coset class.
    std::vector<std::vector<QSqrt2>> diffs;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> pair_idx(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<QSqrt2> d(n), dneg(n);
            for (int c = 0; c < n; ++c) {
                d[c] = p.offsets()[j][c] - p.offsets()[i][c];
                dneg[c] = -d[c];
            }
            std::string key = std::min(coset_key(d), coset_key(dneg));
            auto [it, fresh] = index.emplace(key, static_cast<int>(diffs.size()));
            if (fresh) diffs.push_back(std::move(d));
            pair_idx[i][j] = pair_idx[j][i] = it->second;
        }

    // All cross-class minima in one capped sweep: norms above the running
    // minimum are pruned instead of enumerated.
    JointCosetMinimum joint = joint_coset_minimum(base, diffs, base_min, opts);
    QSqrt2 m = joint.norm;
    if (m.sign() <= 0)
        throw PreconditionError("packing has coincident centers");

    std::uint64_t touching = 0;
    for (int i = 0; i < k; ++i) {
        std::uint64_t t = (base_min == m) ? base_cnt : 0;
        for (int j = 0; j < k; ++j)
            if (j != i) t += joint.counts[pair_idx[i][j]];
        touching = std::max(touching, t);
    }

    PackingInvariants inv;
    inv.min_dist_sq = m;
    inv.max_touching = touching;
    inv.cosets = k;
    QSqrt2 quarter = m * QSqrt2(Rational(1, 4));
    QSqrt2 pw(1);
    for (int i = 0; i < n; ++i) pw *= quarter;
    inv.center_density_sq = pw * QSqrt2(Rational(static_cast<long long>(k)) *
                                        Rational(static_cast<long long>(k))) *
                            base.determinant().inverse();
    inv.center_density = std::sqrt(inv.center_density_sq.to_double());
    inv.density = inv.center_density * unit_ball_volume(n);
    return inv;
}

} // namespace latpack
