#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "latpack/enumerate.hpp"
#include "latpack/lattice.hpp"

namespace latpack::testing {

inline SMat mat(int r, int c, std::initializer_list<const char*> entries) {
    SMat m(r, c);
    auto it = entries.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = parse_scalar(*it++);
    return m;
}

inline Lattice z_lattice(int n) {
    return Lattice::from_gram("Z" + std::to_string(n), SMat::identity(n));
}

inline Lattice a2() {
    return Lattice::from_gram("A2", mat(2, 2, {"2", "1", "1", "2"}));
}

inline Lattice d3_from_basis() {
    return Lattice::from_basis("D3", mat(3, 3, {"1", "1", "0",
                                                "1", "-1", "0",
                                                "0", "1", "1"}));
}

inline Lattice d4() {
    return Lattice::from_gram("D4", mat(4, 4, {"2", "0", "1", "1",
                                               "0", "2", "1", "1",
                                               "1", "1", "2", "1",
                                               "1", "1", "1", "2"}));
}

inline Lattice e8() {
    // Cartan matrix of E8: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    SMat g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = QSqrt2(2);
    auto link = [&](int i, int j) {
        g.at(i - 1, j - 1) = QSqrt2(-1);
        g.at(j - 1, i - 1) = QSqrt2(-1);
    };
    link(1, 3); link(3, 4); link(4, 5); link(5, 6); link(6, 7); link(7, 8); link(2, 4);
    return Lattice::from_gram("E8", g);
}

inline Lattice bcc() {
    return Lattice::from_basis("bcc", mat(3, 3, {"2", "0", "0",
                                                 "0", "2", "0",
                                                 "1", "1", "1"}));
}

inline Lattice mcc() {
    return Lattice::from_gram(
        "mcc", mat(3, 3, {"1/2+1/2*sqrt2", "1/2", "1/2",
                          "1/2", "1/2+1/2*sqrt2", "1/2-1/2*sqrt2",
                          "1/2", "1/2-1/2*sqrt2", "1/2+1/2*sqrt2"}));
}

// Exhaustive cube-scan oracle: counts of (x + shift)^T G (x + shift) <= bound
// over a box provably covering the ball.  Exact arithmetic throughout.
inline std::map<QSqrt2, std::uint64_t> oracle_counts(
    const SMat& gram, const QSqrt2& bound,
    const std::vector<QSqrt2>& shift = {}) {
    int n = gram.rows();
    bool homogeneous = shift.empty();
    SMat ginv = inverse(gram);
    double bd = bound.to_double();
    std::vector<long long> radius(n);
    for (int i = 0; i < n; ++i) {
        double r = std::sqrt(std::max(bd, 0.0) * ginv.at(i, i).to_double());
        double off = homogeneous ? 0.0 : std::abs(shift[i].to_double());
        radius[i] = static_cast<long long>(r + off + 2);
    }
    std::map<QSqrt2, std::uint64_t> out;
    std::vector<QSqrt2> x(n);
    std::vector<long long> ix(n);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (homogeneous) {
                bool zero = true;
                for (int i = 0; i < n; ++i) zero = zero && ix[i] == 0;
                if (zero) return;
            }
            for (int i = 0; i < n; ++i)
                x[i] = QSqrt2(Rational(ix[i])) + (homogeneous ? QSqrt2(0) : shift[i]);
            QSqrt2 v = quadratic_value(gram, x);
            if (v <= bound) ++out[v];
            return;
        }
        for (long long t = -radius[k]; t <= radius[k]; ++t) {
            ix[k] = t;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<QSqrt2> svec(std::initializer_list<const char*> entries) {
    std::vector<QSqrt2> v;
    for (const char* s : entries) v.push_back(parse_scalar(s));
    return v;
}

} // namespace latpack::testing
