#include <doctest.h>

#include "latpack/smatrix.hpp"

using namespace latpack;

namespace {

SMat make(int r, int c, std::initializer_list<long long> vals) {
    SMat m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = QSqrt2(*it++);
    return m;
}

} // namespace

TEST_CASE("determinant and inverse") {
    SMat a2 = make(2, 2, {2, 1, 1, 2});
    CHECK(det(a2) == QSqrt2(3));
    SMat inv = inverse(a2);
    CHECK(inv * a2 == SMat::identity(2));
    CHECK(inv.at(0, 0) == QSqrt2(Rational(2, 3)));

    SMat sing = make(2, 2, {1, 2, 2, 4});
    CHECK(det(sing) == QSqrt2(0));
    CHECK_THROWS_AS(inverse(sing), PreconditionError);
}

TEST_CASE("determinant over Q(sqrt2)") {
    // mcc Gram: (1/2) [[1+s,1,1],[1,1+s,1-s],[1,1-s,1+s]] with s = sqrt2
    SMat g(3, 3);
    QSqrt2 h(Rational(1, 2));
    QSqrt2 d = QSqrt2(Rational(1, 2), Rational(1, 2));
    QSqrt2 e = QSqrt2(Rational(1, 2), Rational(-1, 2));
    g.at(0, 0) = d; g.at(0, 1) = h; g.at(0, 2) = h;
    g.at(1, 0) = h; g.at(1, 1) = d; g.at(1, 2) = e;
    g.at(2, 0) = h; g.at(2, 1) = e; g.at(2, 2) = d;
    CHECK(det(g) == QSqrt2(1));
    CHECK(g.is_symmetric());
    CHECK(is_positive_definite(g));
    CHECK(!g.is_rational());
}

TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite(make(2, 2, {2, 1, 1, 2})));
    CHECK(!is_positive_definite(make(2, 2, {1, 2, 2, 1})));
    CHECK(!is_positive_definite(make(2, 2, {0, 0, 0, 0})));
    CHECK(!is_positive_definite(make(2, 2, {1, 2, 3, 4})));  // not symmetric
    CHECK(!is_positive_definite(make(2, 2, {-2, 1, 1, -2})));
}

TEST_CASE("rref finds rank and pivots") {
    SMat m = make(3, 4, {1, 2, 0, 1,
                         2, 4, 1, 0,
                         3, 6, 1, 1});
    auto piv = rref(m);
    CHECK(piv == std::vector<int>{0, 2});
    CHECK(m.at(0, 1) == QSqrt2(2));
    CHECK(m.at(2, 3) == QSqrt2(0));
}

TEST_CASE("hermite row basis") {
    IMat m(3, 3);
    long long vals[3][3] = {{2, 0, 0}, {0, 2, 0}, {1, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    IMat h = hnf_row_basis(m);
    REQUIRE(h.rows() == 3);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(0, 2) == 1);
    CHECK(h.at(1, 1) == 2);
    CHECK(h.at(2, 2) == 2);

    // Redundant generators collapse: index-2 sublattice of Z^2.
    IMat r(3, 2);
    long long v2[3][2] = {{1, 1}, {1, -1}, {2, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = v2[i][j];
    IMat h2 = hnf_row_basis(r);
    REQUIRE(h2.rows() == 2);
    CHECK(h2.at(0, 0) == 1);
    CHECK(h2.at(0, 1) == 1);
    CHECK(h2.at(1, 0) == 0);
    CHECK(h2.at(1, 1) == 2);
}

TEST_CASE("rational row basis scales correctly") {
    SMat m(2, 2);
    m.at(0, 0) = QSqrt2(Rational(1, 2)); m.at(0, 1) = QSqrt2(Rational(1, 2));
    m.at(1, 0) = QSqrt2(0);              m.at(1, 1) = QSqrt2(1);
    SMat b = lattice_row_basis(m);
    REQUIRE(b.rows() == 2);
    CHECK(b.at(0, 0) == QSqrt2(Rational(1, 2)));
    CHECK(det(b) == QSqrt2(Rational(1, 2)));
}

TEST_CASE("LLL reduction preserves the lattice") {
    // A badly scaled basis of Z^2: Gram of rows (100, 1), (99, 1).
    SMat g = make(2, 2, {10001, 9901, 9901, 9802});
    auto res = lll_reduce_gram(g);
    CHECK(det(res.gram) == det(g));
    CHECK(res.gram.at(0, 0) <= QSqrt2(2));
    SMat u = res.u.to_smat();
    CHECK(u * g * u.transpose() == res.gram);
    QSqrt2 uDet = det(u);
    CHECK((uDet == QSqrt2(1) || uDet == QSqrt2(-1)));
}
