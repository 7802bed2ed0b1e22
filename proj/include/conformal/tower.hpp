#ifndef CONFORMAL_TOWER_HPP
#define CONFORMAL_TOWER_HPP

#include <memory>
#include <vector>

#include "conformal/matrix.hpp"

namespace conformal {

/// One rung of the compactification tower. Level L carries the
/// paravector model of a 2L+2 dimensional geometry; its n-1
/// generators are 2^L x 2^L matrices generating the Clifford
/// algebra R_{L,L+1}.
struct AlgebraLevel {
    int level = 0;
    int n = 2;                          // paravector dimension, 2L+2
    std::vector<BicMatrix> generators;  // e_1 .. e_{n-1}
    int sig_plus = 2;                   // paravector metric signature (L+2, L)
    int sig_minus = 0;

    int matrix_dim() const { return generators.empty() ? 1 : generators.front().dim(); }

    /// Paravector basis element e_mu = (1, e_k); mu in [0, n).
    BicMatrix basis(int mu) const;
};

/// Level 0: the complex plane, single generator e_1 = i as a 1x1 matrix.
AlgebraLevel base_level();

/// One conformal compactification step. The generators of the input
/// become imath*jmath (x) e_k; the two appended directions are
/// e_n = i*(jmath (x) I) and e_{n+1} = (imath (x) I)*j. Matrix
/// dimension doubles, the signature gains (+1, -1).
AlgebraLevel compactify(const AlgebraLevel& level);

/// Builds level L by iterated compactification from the base.
AlgebraLevel make_level(int L);
std::shared_ptr<const AlgebraLevel> level_ptr(int L);

/// The SL(2,R) block units imath = [[0,1],[-1,0]] and jmath = [[0,1],[1,0]].
BicMatrix imath_unit();
BicMatrix jmath_unit();

/// Real-coefficient paravector x^0 + x^k e_k at a fixed level.
struct Paravector {
    std::shared_ptr<const AlgebraLevel> level;
    std::vector<Rational> x;
};

Paravector make_paravector(std::shared_ptr<const AlgebraLevel> level, std::vector<Rational> coeffs);

/// x^0 I + sum_k x^k e_k.
BicMatrix embed(const AlgebraLevel& level, const std::vector<Rational>& coeffs);
BicMatrix embed(const Paravector& p);

/// The quadratic form x.x = g_{mu nu} x^mu x^nu, extracted from
/// embed(x)*bar(embed(x)).
Rational pv_norm(const Paravector& p);

/// bar(x)/(x.x); throws NullVector on the null cone.
Paravector pv_inverse(const Paravector& p);

} // namespace conformal

#endif
