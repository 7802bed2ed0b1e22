#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conformal/tower.hpp"
#include "test_support.hpp"

using namespace conformal;

TEST_CASE("base level") {
    const AlgebraLevel lv = base_level();
    CHECK(lv.level == 0);
    CHECK(lv.n == 2);
    CHECK(lv.matrix_dim() == 1);
    CHECK(lv.sig_plus == 2);
    CHECK(lv.sig_minus == 0);
    REQUIRE(lv.generators.size() == 1);
    CHECK(as_scalar(lv.generators[0] * lv.generators[0]) == Bicomplex(-1));
}

TEST_CASE("level 1 generators are the Pauli-algebra matrices") {
    const AlgebraLevel lv = make_level(1);
    REQUIRE(lv.generators.size() == 3);
    const Bicomplex i = Bicomplex::unit_i();
    const Bicomplex j = Bicomplex::unit_j();

    BicMatrix e1(2), e2(2), e3(2);
    e1.at(0, 0) = i;
    e1.at(1, 1) = -i;
    e2.at(0, 1) = i;
    e2.at(1, 0) = i;
    e3.at(0, 1) = j;
    e3.at(1, 0) = -j;
    CHECK(lv.generators[0] == e1);
    CHECK(lv.generators[1] == e2);
    CHECK(lv.generators[2] == e3);
}

TEST_CASE("signatures and square patterns up the tower") {
    const AlgebraLevel l2 = make_level(2);
    CHECK(l2.sig_plus == 4);
    CHECK(l2.sig_minus == 2);

    // R_{3,4}: squares (-,-,+,-,+,-,+)
    const AlgebraLevel l3 = make_level(3);
    const std::vector<int> expected{-1, -1, 1, -1, 1, -1, 1};
    REQUIRE(l3.generators.size() == expected.size());
    for (size_t k = 0; k < expected.size(); ++k)
        CHECK(as_scalar(l3.generators[k] * l3.generators[k]) == Bicomplex(expected[k]));
}

TEST_CASE("generators anticommute and respect involutions, levels 0-4") {
    for (int L = 0; L <= 4; ++L) {
        CAPTURE(L);
        const AlgebraLevel lv = make_level(L);
        CHECK(lv.n == 2 * L + 2);
        CHECK(lv.matrix_dim() == 1 << L);

        int plus = 0, minus = 0;
        const BicMatrix zero = BicMatrix::zero(lv.matrix_dim());
        for (size_t k = 0; k < lv.generators.size(); ++k) {
            const BicMatrix& e = lv.generators[k];
            const Bicomplex sq = as_scalar(e * e);
            (sq == Bicomplex(1) ? plus : minus)++;
            CHECK(bar(e) == -e);
            CHECK(dagger(e) == e);
            CHECK(hat(e) == -e);
            for (size_t l = k + 1; l < lv.generators.size(); ++l)
                CHECK(e * lv.generators[l] + lv.generators[l] * e == zero);
        }
        CHECK(plus == L);
        CHECK(minus == L + 1);
    }
}

TEST_CASE("embed") {
    const auto lv = level_ptr(1);
    const Paravector p = make_paravector(lv, {0, 0, 0, 1});
    CHECK(embed(p) == lv->generators[2]);

    const Paravector z = make_paravector(lv, {0, 0, 0, 0});
    CHECK(embed(z).is_zero());

    std::mt19937_64 rng(5);
    std::vector<Rational> coeffs;
    for (int k = 0; k < 4; ++k) coeffs.push_back(test::random_rational(rng));
    const Paravector x = make_paravector(lv, coeffs);
    std::vector<Rational> flipped{coeffs[0], -coeffs[1], -coeffs[2], -coeffs[3]};
    CHECK(bar(embed(x)) == embed(make_paravector(lv, flipped)));

    CHECK_THROWS_AS(make_paravector(lv, {1, 2}), DimensionMismatch);
}

TEST_CASE("embed is injective over small integer coefficients") {
    const auto lv = level_ptr(1);
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    if (a == 0 && b == 0 && c == 0 && d == 0) continue;
                    const Paravector x = make_paravector(
                        lv, {Rational(a), Rational(b), Rational(c), Rational(d)});
                    CHECK(!embed(x).is_zero());
                }
}

TEST_CASE("pv_norm") {
    const auto lv = level_ptr(1);
    CHECK(pv_norm(make_paravector(lv, {1, 0, 0, 0})) == Rational(1));
    CHECK(pv_norm(make_paravector(lv, {0, 0, 0, 1})) == Rational(-1));
    CHECK(pv_norm(make_paravector(lv, {1, 0, 0, 1})) == Rational(0));
}

TEST_CASE("pv_inverse") {
    const auto lv = level_ptr(1);
    const Paravector two = make_paravector(lv, {2, 0, 0, 0});
    CHECK(pv_inverse(two).x == std::vector<Rational>{Rational(1, 2), 0, 0, 0});

    const Paravector e3 = make_paravector(lv, {0, 0, 0, 1});
    CHECK(pv_inverse(e3).x == e3.x);

    CHECK_THROWS_AS(pv_inverse(make_paravector(lv, {1, 0, 0, 1})), NullVector);

    std::mt19937_64 rng(9);
    const BicMatrix id = BicMatrix::identity(2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> coeffs;
        for (int k = 0; k < 4; ++k) coeffs.push_back(test::random_rational(rng));
        const Paravector x = make_paravector(lv, coeffs);
        if (pv_norm(x).is_zero()) continue;
        const Paravector inv = pv_inverse(x);
        CHECK(embed(inv) * embed(x) == id);
        CHECK(pv_inverse(inv).x == x.x);
    }
}
