#ifndef CONFORMAL_MOEBIUS_HPP
#define CONFORMAL_MOEBIUS_HPP

#include <vector>

#include "conformal/matrixf.hpp"
#include "conformal/tower.hpp"

namespace conformal {

/// Antisymmetric plane parameters omega^{mu nu} (radians/rapidity).
struct RotationParams {
    int level = 0;
    std::vector<std::vector<double>> omega; // n x n, omega[mu][nu] = -omega[nu][mu]
};

/// exp(sum_{mu<nu} s_{mu nu} omega^{mu nu}) on the float mirror of
/// the spin operators.
BicMatrixF rotor(const AlgebraLevel& level, const std::vector<std::vector<double>>& omega);

/// r embed(x) dagger(r), projected back to paravector coefficients.
/// Throws NotParavector when the off-span residual exceeds tol.
std::vector<double> rotate(const AlgebraLevel& level, const BicMatrixF& r,
                           const std::vector<double>& x, double tol = 1e-9);

/// 2x2 block matrix of algebra elements acting by fractional-linear
/// maps x -> (a x + b)(c x + d)^{-1}.
struct VahlenMatrix {
    BicMatrixF a, b, c, d;
};

VahlenMatrix vahlen_identity(const AlgebraLevel& level);
VahlenMatrix vahlen_translation(const AlgebraLevel& level, const std::vector<Rational>& b);
VahlenMatrix vahlen_dilation(const AlgebraLevel& level, double lambda);
VahlenMatrix vahlen_inversion(const AlgebraLevel& level);
VahlenMatrix vahlen_special(const AlgebraLevel& level, const std::vector<Rational>& c);

/// Block 2x2 product.
VahlenMatrix vahlen_compose(const VahlenMatrix& u, const VahlenMatrix& v);

/// Throws MapsToInfinity when c x + d is singular, NotParavector when
/// the image leaves the paravector span beyond tol.
std::vector<double> moebius_apply(const AlgebraLevel& level, const VahlenMatrix& v,
                                  const std::vector<double>& x, double tol = 1e-9);

/// Float embedding and its left inverse: least-squares projection of
/// a matrix onto the paravector span, with residual reporting.
BicMatrixF embed_f(const AlgebraLevel& level, const std::vector<double>& coeffs);
std::vector<double> project_paravector(const AlgebraLevel& level, const BicMatrixF& m,
                                       double tol);

/// Metric form g_{mu nu} x^mu x^nu in doubles.
double pv_norm_f(const AlgebraLevel& level, const std::vector<double>& x);

} // namespace conformal

#endif
