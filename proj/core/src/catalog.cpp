#include "latpack/catalog.hpp"

#include <array>
#include <utility>

#include "latpack/errors.hpp"

namespace latpack {

namespace {

// Simply-laced root lattice from its Dynkin bonds.
Lattice cartan(std::string name, int n, const std::vector<std::pair<int, int>>& bonds) {
    SMat g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = QSqrt2(2);
    for (auto [i, j] : bonds) {
        g.at(i, j) = QSqrt2(-1);
        g.at(j, i) = QSqrt2(-1);
    }
    return Lattice::from_gram(std::move(name), std::move(g));
}

Lattice a3() {
    return cartan("A3", 3, {{0, 1}, {1, 2}});
}

Lattice e6() {
    return cartan("E6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
}

Lattice e7() {
    return cartan("E7", 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
}

Lattice e8() {
    return packing_to_lattice(d_plus(8), "E8");
}

// Laminated 9-dimensional lattice at minimal norm 4: the theta = 0 member
// of the sliding family, doubled.
Lattice lambda9() {
    return packing_to_lattice(d9_theta_plus(Rational(0)), "L9").scaled(QSqrt2(2));
}

// One layer over a deep hole of the 9-dimensional laminate (squared
// distance 5/2, so the layer height is sqrt(3/2) and leaves the scalar
// field).  The Gram of the stacked lattice is still integral; it is
// frozen here as data.
Lattice lambda10() {
    const int g[10][10] = {
        {4, 1, 1, 1, 1, 1, 1, 1, 0, 2},
        {1, 4, 2, 2, 2, 2, 2, 2, 4, 2},
        {1, 2, 4, 2, 2, 2, 2, 2, 4, 2},
        {1, 2, 2, 4, 2, 2, 2, 2, 4, 2},
        {1, 2, 2, 2, 4, 2, 2, 2, 4, 1},
        {1, 2, 2, 2, 2, 4, 2, 2, 4, 1},
        {1, 2, 2, 2, 2, 2, 4, 2, 4, 1},
        {1, 2, 2, 2, 2, 2, 2, 4, 4, 1},
        {0, 4, 4, 4, 4, 4, 4, 4, 8, 2},
        {2, 2, 2, 2, 1, 1, 1, 1, 2, 4},
    };
    SMat m(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) m.at(i, j) = QSqrt2(g[i][j]);
    return Lattice::from_gram("L10", std::move(m));
}

// Preimage of the hexacode in Eisenstein 6-space, with the trace form
// halved.  Coordinates are pairs (a, b) for a + b w with w a primitive
// cube root of unity; multiplication by w sends (a, b) to (-b, a - b).
Lattice build_k12() {
    using E = std::pair<int, int>;
    const E F0{0, 0}, F1{1, 0}, Fw{0, 1}, Fw2{-1, -1};
    const std::array<std::array<E, 6>, 3> gens = {{
        {F1, F0, F0, F1, Fw, Fw},
        {F0, F1, F0, Fw, F1, Fw},
        {F0, F0, F1, Fw, Fw, F1},
    }};
    (void)Fw2;

    IMat rows(18, 12);
    int r = 0;
    for (int i = 0; i < 6; ++i) {
        rows.at(r++, 2 * i) = 2;
        rows.at(r++, 2 * i + 1) = 2;
    }
    for (const auto& g : gens) {
        for (int i = 0; i < 6; ++i) {
            rows.at(r, 2 * i) = g[i].first;
            rows.at(r, 2 * i + 1) = g[i].second;
        }
        ++r;
        for (int i = 0; i < 6; ++i) {
            rows.at(r, 2 * i) = -g[i].second;
            rows.at(r, 2 * i + 1) = g[i].first - g[i].second;
        }
        ++r;
    }

    SMat q(12, 12);
    for (int i = 0; i < 6; ++i) {
        q.at(2 * i, 2 * i) = QSqrt2(2);
        q.at(2 * i + 1, 2 * i + 1) = QSqrt2(2);
        q.at(2 * i, 2 * i + 1) = QSqrt2(-1);
        q.at(2 * i + 1, 2 * i) = QSqrt2(-1);
    }
    SMat b = hnf_row_basis(rows).to_smat();
    Lattice k12 =
        Lattice::from_gram("K12", (b * q * b.transpose()).scaled(QSqrt2(Rational(1, 2))));
    if (!k12.is_even() || k12.determinant() != QSqrt2(729))
        throw ConstructionError("hexacode preimage is not the expected lattice");
    return k12;
}

Lattice build_bw16() {
    return construction_b(reed_muller_1(4)).scaled(QSqrt2(Rational(1, 2))).renamed("BW16");
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> es;
    auto add = [&](std::string name, std::string summary, int dim,
                   std::function<Lattice()> build, QSqrt2 det, QSqrt2 min,
                   std::uint64_t kissing) {
        es.push_back({std::move(name), std::move(summary), dim, std::move(build),
                      std::move(det), std::move(min), kissing});
    };
    QSqrt2 c12(Rational(1, 2), Rational(1, 2));  // (1+sqrt2)/2

    for (int n = 1; n <= 4; ++n)
        add(n == 1 ? "Z" : "Z" + std::to_string(n), "integer grid", n,
            [n] { return z_n(n); }, QSqrt2(1), QSqrt2(1), 2ull * n);
    add("A2", "hexagonal", 2, [] { return cartan("A2", 2, {{0, 1}}); }, QSqrt2(3),
        QSqrt2(2), 6);
    add("A3", "face-centred cubic in root coordinates", 3, a3, QSqrt2(4), QSqrt2(2), 12);
    for (int n = 3; n <= 9; ++n)
        add("D" + std::to_string(n), "checkerboard", n, [n] { return d_lattice(n); },
            QSqrt2(4), QSqrt2(2), 2ull * n * (n - 1));
    add("E6", "exceptional root lattice", 6, e6, QSqrt2(3), QSqrt2(2), 72);
    add("E7", "exceptional root lattice", 7, e7, QSqrt2(2), QSqrt2(2), 126);
    add("E8", "even unimodular: the diamond packing closes up", 8, e8, QSqrt2(1),
        QSqrt2(2), 240);
    add("D8+", "checkerboard plus its deep-hole translate", 8,
        [] { return packing_to_lattice(d_plus(8), "D8+"); }, QSqrt2(1), QSqrt2(2), 240);
    add("K12", "Coxeter-Todd: hexacode over the Eisenstein integers", 12, build_k12,
        QSqrt2(729), QSqrt2(4), 756);
    add("BW16", "Barnes-Wall: construction B on the first-order Reed-Muller code", 16,
        build_bw16, QSqrt2(256), QSqrt2(4), 4320);
    add("Leech", "even unimodular in dimension 24, from the Golay code", 24,
        [] { return leech_from_golay(); }, QSqrt2(1), QSqrt2(4), 196560);
    add("fcc", "face-centred cubic", 3, [] { return d_lattice(3).renamed("fcc"); },
        QSqrt2(4), QSqrt2(2), 12);
    add("bcc", "body-centred cubic", 3,
        [] {
            SMat b(3, 3);
            b.at(0, 0) = QSqrt2(2);
            b.at(1, 1) = QSqrt2(2);
            b.at(2, 0) = b.at(2, 1) = b.at(2, 2) = QSqrt2(1);
            return Lattice::from_basis("bcc", std::move(b));
        },
        QSqrt2(16), QSqrt2(3), 8);
    add("mcc", "mean-centred cuboidal: isodual, between fcc and bcc", 3,
        [] {
            return uv_lattice(QSqrt2(0, Rational(1, 2)), QSqrt2(Rational(1, 2)))
                .renamed("mcc");
        },
        QSqrt2(1), c12, 8);

    struct Lam {
        const char* name;
        int dim;
        std::function<Lattice()> build;
        int det;
        int kissing;
    };
    const std::vector<Lam> lams = {
        {"L1", 1, [] { return z_n(1).scaled(QSqrt2(4)).renamed("L1"); }, 4, 2},
        {"L2", 2, [] { return cartan("L2", 2, {{0, 1}}).scaled(QSqrt2(2)); }, 12, 6},
        {"L3", 3, [] { return d_lattice(3).scaled(QSqrt2(2)).renamed("L3"); }, 32, 12},
        {"L4", 4, [] { return d_lattice(4).scaled(QSqrt2(2)).renamed("L4"); }, 64, 24},
        {"L5", 5, [] { return d_lattice(5).scaled(QSqrt2(2)).renamed("L5"); }, 128, 40},
        {"L6", 6, [] { return e6().scaled(QSqrt2(2)).renamed("L6"); }, 192, 72},
        {"L7", 7, [] { return e7().scaled(QSqrt2(2)).renamed("L7"); }, 256, 126},
        {"L8", 8, [] { return e8().scaled(QSqrt2(2)).renamed("L8"); }, 256, 240},
        {"L9", 9, lambda9, 512, 272},
        {"L10", 10, lambda10, 768, 336},
    };
    for (const auto& l : lams)
        add(l.name, "laminated, minimal norm 4", l.dim, l.build, QSqrt2(l.det),
            QSqrt2(4), l.kissing);
    return es;
}

} // namespace

const std::vector<CatalogEntry>& lattice_catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const CatalogEntry& e : lattice_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

Lattice catalog_lattice(const std::string& name) {
    const CatalogEntry* e = catalog_find(name);
    if (!e) throw PreconditionError("no catalog lattice named " + name);
    return e->build().renamed(e->name);
}

CatalogCheck catalog_verify(const CatalogEntry& e, const EnumOptions& opts) {
    Lattice l = e.build();
    CatalogCheck c;
    c.det = l.determinant();
    c.min_norm = min_norm(l, opts);
    c.kissing = kissing_number(l, opts);
    c.det_ok = c.det == e.det;
    c.min_ok = c.min_norm == e.min_norm;
    c.kissing_ok = c.kissing == e.kissing;
    return c;
}

Lattice uv_lattice(const QSqrt2& u_sq, const QSqrt2& v_sq) {
    if (!(u_sq > QSqrt2(0)) || !(v_sq > QSqrt2(0)))
        throw PreconditionError("squared generator lengths must be positive");
    const QSqrt2& p = u_sq;
    const QSqrt2& q = v_sq;
    SMat g(3, 3);
    g.at(0, 0) = p + q;
    g.at(1, 1) = p + q;
    g.at(2, 2) = p + q;
    g.at(0, 1) = g.at(1, 0) = q;
    g.at(0, 2) = g.at(2, 0) = q;
    g.at(1, 2) = g.at(2, 1) = q - p;
    return Lattice::from_gram("uv", std::move(g));
}

} // namespace latpack
