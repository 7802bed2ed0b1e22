#ifndef CONFORMAL_LIE_HPP
#define CONFORMAL_LIE_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conformal/tensors.hpp"

namespace conformal {

struct CheckFailure {
    std::vector<int> indices;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    long checks = 0;
    std::vector<CheckFailure> failures;
    double ms = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json(bool with_timing = true) const;
};

/// Metric diagonality, +-1 entries, and the signature pattern implied
/// by the generator squares.
VerificationReport verify_metric(const AlgebraLevel& level);

/// Involution behaviour on generators: bar -> -e, dagger -> +e,
/// hat -> -e, plus pairwise anticommutation.
VerificationReport verify_involutions(const AlgebraLevel& level);

/// Spin-table structure: antisymmetry, zero diagonal, 2 s = sigma,
/// and e_mu bar(e_nu) = g_{mu nu} I + sigma_{mu nu}.
VerificationReport verify_spin(const AlgebraLevel& level);

/// Exact sweep of [s_{mu nu}, s_{rho sigma}] =
/// g_{mu sigma} s_{nu rho} - g_{mu rho} s_{nu sigma}
/// + g_{nu sigma} s_{mu rho} - g_{nu rho} s_{mu sigma}
/// over all index quadruples of the level.
VerificationReport verify_lorentz(const AlgebraLevel& level);

/// Momentum, special-conformal and dilation generators built from the
/// ambient spin components in the Kastrup arrangement:
/// p_mu = -s_{mu,n} - s_{mu,n+1}, q_mu = s_{mu,n} - s_{mu,n+1},
/// d = s_{n,n+1}, with n the base paravector dimension.
struct ConformalGenerators {
    int base_n = 0;
    std::vector<BicMatrix> p;
    std::vector<BicMatrix> q;
    BicMatrix d;
    SpinTable ambient_s; // spin operators of compactify(base)

    ConformalGenerators() : d(1) {}
};

ConformalGenerators conformal_generators(const AlgebraLevel& base);

/// Exact check of the conformal algebra relations:
/// [s,p], [s,q], [d,p] = -p, [d,q] = q, [q,p] = 2(g d + s),
/// plus the vanishing brackets [p,p], [q,q], [d,s].
VerificationReport verify_conformal(const AlgebraLevel& base);

/// The ambient spin operators restricted to base indices still
/// satisfy the Lorentz relation with the base metric.
VerificationReport reduced_spin(const AlgebraLevel& base);

/// Moebius homogeneous-space split: g = {s, p, q, d}, h = {s, q, d}.
/// Construction verifies that h is closed under the bracket by exact
/// rational span membership; throws NotClosed on failure.
struct HomogeneousSplit {
    std::vector<BicMatrix> g_basis;
    std::vector<BicMatrix> h_basis;
};

HomogeneousSplit homogeneous_split(const AlgebraLevel& base);

} // namespace conformal

#endif
