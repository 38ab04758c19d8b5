#include "latpack/isometry.hpp"

#include <map>

namespace latpack {

std::optional<IMat> find_isometry(const Lattice& l1, const Lattice& l2,
                                  const EnumOptions& opts) {
    if (l1.dim() != l2.dim())
        throw PreconditionError("isometry search requires equal dimensions");
    int n = l1.dim();
    const SMat& g1 = l1.gram();
    const SMat& g2 = l2.gram();

    if (l1.determinant() != l2.determinant()) return std::nullopt;
    if (min_norm(l1, opts) != min_norm(l2, opts)) return std::nullopt;
    if (kissing_number(l1, opts) != kissing_number(l2, opts)) return std::nullopt;

    // Match against a reduced copy of l1: an unreduced Gram (a dual, say) has
    // a large diagonal, and the candidate pool grows with the largest entry.
    LllResult red = lll_reduce_gram(g1);
    const SMat& h = red.gram;

    QSqrt2 maxdiag = h.at(0, 0);
    for (int i = 1; i < n; ++i) maxdiag = std::max(maxdiag, h.at(i, i));
    std::vector<ShortVector> pool = short_vectors(l2, maxdiag, opts);

    std::map<QSqrt2, std::vector<int>> buckets;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i)
        buckets[pool[i].norm].push_back(i);
    for (int i = 0; i < n; ++i)
        if (!buckets.count(h.at(i, i))) return std::nullopt;

    // Precompute G2 * v for every candidate so pairwise products against
    // already-chosen rows are single dot products.
    std::vector<std::vector<QSqrt2>> gv(pool.size(), std::vector<QSqrt2>(n));
    for (std::size_t p = 0; p < pool.size(); ++p)
        for (int i = 0; i < n; ++i) {
            QSqrt2 s;
            for (int j = 0; j < n; ++j) {
                if (pool[p].coords[j] == 0) continue;
                s += g2.at(i, j) * QSqrt2(pool[p].coords[j]);
            }
            gv[p][i] = s;
        }

    std::vector<int> chosen(n, -1);
    std::uint64_t nodes = 0;

    auto rec = [&](auto&& self, int row) -> bool {
        if (row == n) return true;
        for (int idx : buckets.at(h.at(row, row))) {
            if (++nodes > opts.node_budget)
                throw ResourceError("isometry search node budget exceeded");
            bool ok = true;
            for (int j = 0; j < row && ok; ++j) {
                QSqrt2 ip;
                const auto& cj = pool[chosen[j]].coords;
                for (int k = 0; k < n; ++k) {
                    if (cj[k] == 0) continue;
                    ip += QSqrt2(cj[k]) * gv[idx][k];
                }
                ok = (ip == h.at(row, j));
            }
            if (!ok) continue;
            chosen[row] = idx;
            if (self(self, row + 1)) return true;
            chosen[row] = -1;
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;

    // The rows solve U' G2 U'^T = h = red.u G1 red.u^T, so undo the reduction.
    IMat uprime(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) uprime.at(i, j) = pool[chosen[i]].coords[j];
    SMat full = inverse(red.u.to_smat()) * uprime.to_smat();
    IMat u(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!full.at(i, j).is_integer())
                throw Error("isometry witness is not integral; reduction is inconsistent");
            u.at(i, j) = num(full.at(i, j).rat);
        }
    SMat us = u.to_smat();
    if (!(us * g2 * us.transpose() == g1))
        throw Error("isometry verification failed; backtracking is inconsistent");
    return u;
}

bool isometry_equivalent(const Lattice& l1, const Lattice& l2,
                         const EnumOptions& opts) {
    return find_isometry(l1, l2, opts).has_value();
}

} // namespace latpack
