#include "latpack/lattice.hpp"

namespace latpack {

Lattice Lattice::from_gram(std::string name, SMat gram) {
    if (gram.rows() < 1) throw PreconditionError("lattice dimension must be at least 1");
    if (!gram.is_symmetric()) throw PreconditionError("Gram matrix must be symmetric");
    if (!is_positive_definite(gram))
        throw PreconditionError("Gram matrix must be positive definite");
    Lattice l;
    l.name_ = std::move(name);
    l.gram_ = std::move(gram);
    return l;
}

Lattice Lattice::from_basis(std::string name, SMat basis) {
    SMat gram = basis * basis.transpose();
    Lattice l = from_gram(std::move(name), std::move(gram));
    l.basis_ = std::move(basis);
    return l;
}

bool Lattice::is_even() const {
    if (!is_integral()) return false;
    for (int i = 0; i < dim(); ++i)
        if (num(gram_.at(i, i).rat) % 2 != 0) return false;
    return true;
}

Lattice Lattice::scaled(const QSqrt2& f) const {
    if (f.sign() <= 0) throw PreconditionError("scale factor must be positive");
    Lattice l = from_gram(name_, gram_.scaled(f));
    if (basis_) {
        if (auto s = qsqrt2_sqrt(f)) l.basis_ = basis_->scaled(*s);
    }
    return l;
}

Lattice Lattice::dual() const {
    SMat ginv = inverse(gram_);
    Lattice l = from_gram(name_ + "*", ginv);
    if (basis_) l.basis_ = ginv * *basis_;
    return l;
}

Lattice Lattice::renamed(std::string name) const {
    Lattice l = *this;
    l.name_ = std::move(name);
    return l;
}

QSqrt2 quadratic_value(const SMat& gram, const std::vector<Rational>& x) {
    return gram_product(gram, x, x);
}

QSqrt2 quadratic_value(const SMat& gram, const std::vector<QSqrt2>& x) {
    return gram_product(gram, x, x);
}

QSqrt2 gram_product(const SMat& gram, const std::vector<QSqrt2>& x,
                    const std::vector<QSqrt2>& y) {
    int n = gram.rows();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw PreconditionError("coordinate vector length mismatch");
    QSqrt2 acc;
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        QSqrt2 row;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            row += gram.at(i, j) * y[j];
        }
        acc += x[i] * row;
    }
    return acc;
}

QSqrt2 gram_product(const SMat& gram, const std::vector<Rational>& x,
                    const std::vector<Rational>& y) {
    std::vector<QSqrt2> xs(x.begin(), x.end()), ys(y.begin(), y.end());
    return gram_product(gram, xs, ys);
}

} // namespace latpack
