#pragma once

#include <optional>
#include <string>

#include "latpack/smatrix.hpp"

namespace latpack {

// A lattice is defined by an exact Gram matrix over Q(sqrt2); an explicit
// basis (rows spanning the lattice in ambient coordinates) is optional and
// carried only when a construction naturally provides one.
class Lattice {
public:
    static Lattice from_gram(std::string name, SMat gram);
    static Lattice from_basis(std::string name, SMat basis);

    const std::string& name() const { return name_; }
    int dim() const { return gram_.rows(); }
    const SMat& gram() const { return gram_; }
    const std::optional<SMat>& basis() const { return basis_; }

    QSqrt2 determinant() const { return det(gram_); }
    bool is_integral() const { return gram_.is_integral(); }
    bool is_even() const;
    bool is_unimodular() const { return is_integral() && determinant() == QSqrt2(1); }

    // Lattice with Gram scaled by f.  The basis is kept when sqrt(f)
    // exists in Q(sqrt2), otherwise dropped.
    Lattice scaled(const QSqrt2& f) const;

    Lattice dual() const;

    Lattice renamed(std::string name) const;

private:
    Lattice() = default;
    std::string name_;
    SMat gram_;
    std::optional<SMat> basis_;
};

// Exact value x^T G x.
QSqrt2 quadratic_value(const SMat& gram, const std::vector<Rational>& x);
QSqrt2 quadratic_value(const SMat& gram, const std::vector<QSqrt2>& x);

// Exact inner product x^T G y.
QSqrt2 gram_product(const SMat& gram, const std::vector<Rational>& x,
                    const std::vector<Rational>& y);
QSqrt2 gram_product(const SMat& gram, const std::vector<QSqrt2>& x,
                    const std::vector<QSqrt2>& y);

} // namespace latpack
