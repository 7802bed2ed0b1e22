#ifndef CONFORMAL_MATRIX_HPP
#define CONFORMAL_MATRIX_HPP

#include <string>
#include <vector>

#include "conformal/bicomplex.hpp"
#include "conformal/errors.hpp"

namespace conformal {

/// Dense square matrix over Bicomplex. Dimension is fixed at
/// construction; the entry ring is commutative, so transpose-based
/// involutions behave like scalar conjugations.
class BicMatrix {
public:
    explicit BicMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

    static BicMatrix identity(int dim);
    static BicMatrix zero(int dim) { return BicMatrix(dim); }
    /// lambda * I
    static BicMatrix scalar(int dim, const Bicomplex& lambda);

    int dim() const { return dim_; }

    Bicomplex& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const Bicomplex& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_zero() const;

    friend bool operator==(const BicMatrix& a, const BicMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const BicMatrix& a, const BicMatrix& b) { return !(a == b); }

    BicMatrix operator-() const;
    friend BicMatrix operator+(const BicMatrix& a, const BicMatrix& b);
    friend BicMatrix operator-(const BicMatrix& a, const BicMatrix& b);
    friend BicMatrix operator*(const BicMatrix& a, const BicMatrix& b);
    friend BicMatrix operator*(const Bicomplex& c, const BicMatrix& a);
    friend BicMatrix operator*(const Rational& c, const BicMatrix& a);

private:
    int dim_;
    std::vector<Bicomplex> e_;
};

/// Clifford conjugation at matrix level: transpose + entrywise bar.
/// Anti-automorphism, involutive.
BicMatrix bar(const BicMatrix& a);

/// Reversion: transpose + entrywise dagger. Anti-automorphism fixing
/// every tower generator.
BicMatrix dagger(const BicMatrix& a);

/// Main involution: entrywise hat, no transpose. Automorphism sending
/// every tower generator to its negative; equals bar(dagger(.)).
BicMatrix hat(const BicMatrix& a);

/// Kronecker product; the left factor indexes the outer 2x2 blocks.
BicMatrix kron(const BicMatrix& a, const BicMatrix& b);

/// AB - BA.
BicMatrix commutator(const BicMatrix& a, const BicMatrix& b);

/// Extracts lambda from lambda * I; throws NotScalar otherwise.
Bicomplex as_scalar(const BicMatrix& a);

std::string to_string(const BicMatrix& a);

} // namespace conformal

#endif
