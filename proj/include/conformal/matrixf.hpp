#ifndef CONFORMAL_MATRIXF_HPP
#define CONFORMAL_MATRIXF_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "conformal/errors.hpp"
#include "conformal/matrix.hpp"

namespace conformal {

/// Floating-point mirror of a bicomplex scalar.
struct BicomplexF {
    double re = 0, im_i = 0, im_j = 0, im_ij = 0;

    BicomplexF() = default;
    BicomplexF(double w, double x = 0, double y = 0, double z = 0)
        : re(w), im_i(x), im_j(y), im_ij(z) {}

    static BicomplexF from_exact(const Bicomplex& a) {
        return {to_double(a.re), to_double(a.im_i), to_double(a.im_j), to_double(a.im_ij)};
    }

    double abs1() const {
        return std::abs(re) + std::abs(im_i) + std::abs(im_j) + std::abs(im_ij);
    }

    BicomplexF operator-() const { return {-re, -im_i, -im_j, -im_ij}; }
    BicomplexF& operator+=(const BicomplexF& o) {
        re += o.re;
        im_i += o.im_i;
        im_j += o.im_j;
        im_ij += o.im_ij;
        return *this;
    }
    friend BicomplexF operator+(BicomplexF a, const BicomplexF& b) { return a += b; }
    friend BicomplexF operator-(BicomplexF a, const BicomplexF& b) {
        a += -b;
        return a;
    }
    friend BicomplexF operator*(const BicomplexF& a, const BicomplexF& b) {
        return {a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j + a.im_ij * b.im_ij,
                a.re * b.im_i + a.im_i * b.re - a.im_j * b.im_ij - a.im_ij * b.im_j,
                a.re * b.im_j + a.im_j * b.re - a.im_i * b.im_ij - a.im_ij * b.im_i,
                a.re * b.im_ij + a.im_ij * b.re + a.im_i * b.im_j + a.im_j * b.im_i};
    }
    friend BicomplexF operator*(double c, const BicomplexF& a) {
        return {c * a.re, c * a.im_i, c * a.im_j, c * a.im_ij};
    }

    // Idempotent split along (1 +- ij)/2; each component is complex in i.
    std::complex<double> plus_part() const { return {re + im_ij, im_i - im_j}; }
    std::complex<double> minus_part() const { return {re - im_ij, im_i + im_j}; }
    static BicomplexF from_parts(std::complex<double> p, std::complex<double> m) {
        return {(p.real() + m.real()) / 2, (p.imag() + m.imag()) / 2,
                (m.imag() - p.imag()) / 2, (p.real() - m.real()) / 2};
    }
};

/// Floating mirror of BicMatrix; carrier for exponentials and Vahlen
/// transformations, which need division.
class BicMatrixF {
public:
    explicit BicMatrixF(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

    static BicMatrixF identity(int dim);
    static BicMatrixF from_exact(const BicMatrix& a);

    int dim() const { return dim_; }
    BicomplexF& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const BicomplexF& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    /// Max over entries of the 1-norm of the four components.
    double max_abs() const;
    bool finite() const;

    BicMatrixF operator-() const;
    friend BicMatrixF operator+(const BicMatrixF& a, const BicMatrixF& b);
    friend BicMatrixF operator-(const BicMatrixF& a, const BicMatrixF& b);
    friend BicMatrixF operator*(const BicMatrixF& a, const BicMatrixF& b);
    friend BicMatrixF operator*(double c, const BicMatrixF& a);

private:
    int dim_;
    std::vector<BicomplexF> e_;
};

BicMatrixF bar(const BicMatrixF& a);
BicMatrixF dagger(const BicMatrixF& a);
BicMatrixF hat(const BicMatrixF& a);

/// Matrix exponential, scaling and squaring over a truncated series.
/// The entry ring is commutative, so the scalar algorithm applies
/// unchanged. Throws NonFinite on non-finite input or overflow.
BicMatrixF mexp(const BicMatrixF& a);

/// Inverse via the idempotent split into two complex matrices;
/// empty when either component is singular.
std::optional<BicMatrixF> try_inverse(const BicMatrixF& a);

} // namespace conformal

#endif
