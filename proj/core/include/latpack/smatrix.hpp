#pragma once

#include <vector>

#include "latpack/qsqrt2.hpp"

namespace latpack {

// Dense matrix over Q(sqrt2), row-major.
class SMat {
public:
    SMat() = default;
    SMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static SMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QSqrt2& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const QSqrt2& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_rational() const;
    bool is_integral() const;

    SMat transpose() const;
    SMat operator*(const SMat& o) const;
    SMat operator+(const SMat& o) const;
    SMat operator-(const SMat& o) const;
    SMat scaled(const QSqrt2& f) const;
    friend bool operator==(const SMat& a, const SMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<QSqrt2> a_;
};

// Exact determinant of a square matrix.
QSqrt2 det(const SMat& m);

// Exact inverse; throws PreconditionError if singular.
SMat inverse(const SMat& m);

// Exact positive-definiteness test for a symmetric matrix.
bool is_positive_definite(const SMat& m);

// Reduce m in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(SMat& m);

// Integer matrix over arbitrary-precision integers.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IMat operator*(const IMat& o) const;
    SMat to_smat() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Canonical Hermite-form basis (full row rank, pivots positive, entries
// above each pivot reduced) of the integer row span of m.
IMat hnf_row_basis(const IMat& m);

// Basis of the row span of a rational matrix as a lattice: scales to
// integers, runs hnf_row_basis, scales back.
SMat lattice_row_basis(const SMat& m);

struct LllResult {
    SMat gram;  // U * G * U^T, computed exactly
    IMat u;     // unimodular transform
};

// LLL-reduces a positive-definite Gram matrix.  The reduction decisions use
// floating point; the returned Gram is recomputed exactly from the integer
// transform.
LllResult lll_reduce_gram(const SMat& gram);

} // namespace latpack
