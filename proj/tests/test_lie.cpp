#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conformal/lie.hpp"
#include "test_support.hpp"

using namespace conformal;

TEST_CASE("structural suites pass, levels 0-3") {
    for (int L = 0; L <= 3; ++L) {
        CAPTURE(L);
        const AlgebraLevel lv = make_level(L);
        CHECK(verify_metric(lv).passed());
        CHECK(verify_involutions(lv).passed());
        CHECK(verify_spin(lv).passed());
    }
}

TEST_CASE("lorentz sweep passes, levels 0-2") {
    for (int L = 0; L <= 2; ++L) {
        CAPTURE(L);
        const VerificationReport r = verify_lorentz(make_level(L));
        CHECK(r.passed());
        const long n = 2 * L + 2;
        CHECK(r.checks == n * n * n * n);
    }
}

TEST_CASE("specific lorentz brackets at level 1") {
    const AlgebraLevel lv = make_level(1);
    const SpinTable s = spin_ops(lv);
    // metric is diag(1,1,1,-1): [s_12, s_23] = g_22 s_13 = s_13
    CHECK(commutator(s.entries[1][2], s.entries[2][3]) == s.entries[1][3]);
    CHECK(commutator(s.entries[0][1], s.entries[0][1]).is_zero());
}

TEST_CASE("conformal generator closed forms") {
    const AlgebraLevel base = make_level(1);
    const ConformalGenerators cg = conformal_generators(base);
    const int d = 4;
    const Rational two(2);

    const BicMatrix im = kron(imath_unit(), BicMatrix::identity(2));
    const BicMatrix jm = kron(jmath_unit(), BicMatrix::identity(2));
    const Bicomplex i = Bicomplex::unit_i();
    const Bicomplex j = Bicomplex::unit_j();

    // 2p_0 = imath j + i jmath, 2q_0 = imath j - i jmath, 2d = imath jmath i j
    CHECK(two * cg.p[0] == j * im + i * jm);
    CHECK(two * cg.q[0] == j * im - i * jm);
    CHECK(two * cg.d == (i * j) * (im * jm));

    for (int k = 1; k < 4; ++k) {
        const BicMatrix ek = kron(BicMatrix::identity(2), base.generators[static_cast<size_t>(k - 1)]);
        CHECK(two * cg.p[k] == ek * (j * jm + i * im));
        CHECK(two * cg.q[k] == ek * (j * jm - i * im));
        // p_k - q_k = e_k imath i
        CHECK(cg.p[k] - cg.q[k] == i * (ek * im));
    }
    CHECK(cg.d.dim() == d);
}

TEST_CASE("conformal algebra passes, base levels 0-1") {
    for (int L = 0; L <= 1; ++L) {
        CAPTURE(L);
        CHECK(verify_conformal(make_level(L)).passed());
    }
}

TEST_CASE("selected conformal brackets at base level 1") {
    const AlgebraLevel base = make_level(1);
    const ConformalGenerators cg = conformal_generators(base);
    const Rational two(2);

    CHECK(commutator(cg.d, cg.p[0]) == -cg.p[0]);
    CHECK(commutator(cg.d, cg.q[2]) == cg.q[2]);
    CHECK(commutator(cg.p[0], cg.p[1]).is_zero());
    // [q_0, p_0] = 2(g_00 d + s_00) = 2d
    CHECK(commutator(cg.q[0], cg.p[0]) == two * cg.d);
}

TEST_CASE("reduced spin representation, base levels 0-1") {
    for (int L = 0; L <= 1; ++L) {
        CAPTURE(L);
        CHECK(reduced_spin(make_level(L)).passed());
    }
}

TEST_CASE("homogeneous split") {
    const AlgebraLevel base = make_level(1);
    const HomogeneousSplit split = homogeneous_split(base);
    // dim so(4,2) = 15 = 6 s + 4 p + 4 q + 1 d
    CHECK(split.g_basis.size() == 15);
    CHECK(split.h_basis.size() == 11);
    CHECK(split.g_basis.size() - split.h_basis.size() == 4);

    const ConformalGenerators cg = conformal_generators(base);
    CHECK(commutator(cg.q[0], cg.q[1]).is_zero());

    CHECK(homogeneous_split(base_level()).g_basis.size() == 6);
}

TEST_CASE("report json") {
    const VerificationReport r = verify_lorentz(base_level());
    const auto j = r.to_json(false);
    CHECK(j["suite"] == "lorentz(level 0)");
    CHECK(j["checks"] == 16);
    CHECK(j["passed"] == true);
    CHECK(j["failures"].empty());
    CHECK(!j.contains("ms"));
    CHECK(r.to_json(true).contains("ms"));
}

TEST_CASE("failures carry readable words") {
    // Deliberately break a relation by doubling one generator.
    AlgebraLevel lv = make_level(1);
    lv.generators[0] = Rational(2) * lv.generators[0];
    const VerificationReport r = verify_involutions(lv);
    CHECK(r.passed()); // scaling preserves involution signs and anticommutation

    const VerificationReport m = verify_metric(lv);
    CHECK(!m.passed());
    CHECK(!m.failures.empty());
}
