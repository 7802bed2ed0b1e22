#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "conformal/tensors.hpp"
#include "test_support.hpp"

#include <nlohmann/json.hpp>

using namespace conformal;

namespace {

BicMatrix eval_word(const UnitWord& w, const std::vector<Primitive>& vocab, int dim) {
    BicMatrix m = BicMatrix::identity(dim);
    for (const auto& f : w.factors) {
        bool found = false;
        for (const auto& p : vocab)
            if (p.name == f) {
                m = m * p.mat;
                found = true;
                break;
            }
        REQUIRE(found);
    }
    if (w.sign < 0) m = -m;
    return m;
}

} // namespace

TEST_CASE("real product reproduces the metric entries") {
    const AlgebraLevel l0 = base_level();
    CHECK(real_product(l0.basis(1), l0.basis(1)) == Bicomplex(1));

    const AlgebraLevel l1 = make_level(1);
    CHECK(real_product(l1.basis(3), l1.basis(3)) == Bicomplex(-1));
    CHECK(real_product(l1.basis(1), l1.basis(2)).is_zero());
}

TEST_CASE("metric tables, levels 0-3") {
    const std::vector<std::vector<int>> expected{
        {1, 1},
        {1, 1, 1, -1},
        {1, 1, 1, -1, 1, -1},
        {1, 1, 1, -1, 1, -1, 1, -1},
    };
    for (int L = 0; L <= 3; ++L) {
        CAPTURE(L);
        const MetricTable g = metric(make_level(L));
        for (size_t mu = 0; mu < expected[static_cast<size_t>(L)].size(); ++mu)
            for (size_t nu = 0; nu < expected[static_cast<size_t>(L)].size(); ++nu) {
                const Rational want =
                    mu == nu ? Rational(expected[static_cast<size_t>(L)][mu]) : Rational(0);
                CHECK(g.g[mu][nu] == want);
            }
    }
}

TEST_CASE("wedge examples") {
    const AlgebraLevel l0 = base_level();
    const SpinTable s0 = spin_tensor(l0);
    CHECK(as_scalar(s0.entries[0][1]) == -Bicomplex::unit_i());

    const AlgebraLevel l1 = make_level(1);
    const SpinTable s1 = spin_tensor(l1);
    CHECK(s1.entries[1][2] == -(Bicomplex::unit_j() * l1.generators[2]));

    const AlgebraLevel l2 = make_level(2);
    const SpinTable s2 = spin_tensor(l2);
    const BicMatrix imjm = kron(imath_unit() * jmath_unit(), BicMatrix::identity(2));
    CHECK(s2.entries[4][5] == Bicomplex::unit_ij() * imjm);
}

TEST_CASE("spin operators are half the spin tensor") {
    const AlgebraLevel l0 = base_level();
    const SpinTable s = spin_ops(l0);
    CHECK(as_scalar(s.entries[0][1]) == Bicomplex(0, Rational(-1, 2)));

    const AlgebraLevel l1 = make_level(1);
    const SpinTable sigma = spin_tensor(l1);
    const SpinTable half = spin_ops(l1);
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(half.entries[mu][mu].is_zero());
        for (int nu = 0; nu < 4; ++nu)
            CHECK(Rational(2) * half.entries[mu][nu] == sigma.entries[mu][nu]);
    }
}

TEST_CASE("symmetric plus wedge part recovers the product") {
    for (int L = 0; L <= 3; ++L) {
        CAPTURE(L);
        const AlgebraLevel lv = make_level(L);
        const MetricTable g = metric(lv);
        for (int mu = 0; mu < lv.n; ++mu)
            for (int nu = 0; nu < lv.n; ++nu) {
                const BicMatrix prod = lv.basis(mu) * bar(lv.basis(nu));
                const BicMatrix sym =
                    BicMatrix::scalar(lv.matrix_dim(), Bicomplex(g.g[mu][nu]));
                CHECK(prod == sym + wedge(lv.basis(mu), lv.basis(nu)));
            }
    }
}

TEST_CASE("rotation block at level 1 is free of j") {
    const SpinTable sigma = spin_tensor(make_level(1));
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) {
            const BicMatrix& m = sigma.entries[mu][nu];
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    CHECK(m.at(r, c).im_j.is_zero());
                    CHECK(m.at(r, c).im_ij.is_zero());
                }
        }
}

TEST_CASE("decompose examples") {
    const AlgebraLevel l1 = make_level(1);
    const SpinTable s1 = spin_tensor(l1);
    CHECK(to_string(decompose(s1.entries[1][2], l1)) == "-je_3");
    CHECK(to_string(decompose(BicMatrix::identity(2), l1)) == "1");
    CHECK(to_string(decompose(BicMatrix::zero(2), l1)) == "0");

    const AlgebraLevel l2 = make_level(2);
    const SpinTable s2 = spin_tensor(l2);
    CHECK(to_string(decompose(s2.entries[0][4], l2)) == "-iȷ");

    std::mt19937_64 rng(3);
    CHECK_THROWS_AS(decompose(test::random_matrix(rng, 2), l1), NoMatch);
}

TEST_CASE("decompose inverts word evaluation") {
    const AlgebraLevel l2 = make_level(2);
    const auto vocab = table_vocabulary(l2);
    const int n = static_cast<int>(vocab.size());

    // Every product of up to three distinct primitives decomposes back
    // to a word with the same value; collisions resolve to the
    // canonically first word, never to a different matrix.
    std::map<std::string, int> seen;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                UnitWord w{1, {}};
                w.factors.push_back(vocab[static_cast<size_t>(a)].name);
                if (b != a) w.factors.push_back(vocab[static_cast<size_t>(b)].name);
                if (c != b && c != a) w.factors.push_back(vocab[static_cast<size_t>(c)].name);
                const BicMatrix m = eval_word(w, vocab, l2.matrix_dim());
                const UnitWord d = decompose(m, vocab);
                CHECK(eval_word(d, vocab, l2.matrix_dim()) == m);
                CHECK(d.factors.size() <= w.factors.size());
            }
}

TEST_CASE("rendered text tables match the printed forms") {
    const std::string t0 = render_table(base_level(), TableFormat::text);
    CHECK(t0.find("-e_1") != std::string::npos);

    const std::string t1 = render_table(make_level(1), TableFormat::text);
    CHECK(t1.find("-je_3") != std::string::npos);
    CHECK(t1.find("ı") == std::string::npos); // own-generator vocabulary

    const std::string t2 = render_table(make_level(2), TableFormat::text);
    CHECK(t2.find("-ıȷe_1") != std::string::npos);
    CHECK(t2.find("ijıȷ") != std::string::npos);
}

TEST_CASE("json table schema") {
    const std::string doc = render_table(make_level(1), TableFormat::json);
    const auto j = nlohmann::json::parse(doc);
    CHECK(j["level"] == 1);
    CHECK(j["n"] == 4);
    REQUIRE(j["metric"].size() == 4);
    CHECK(j["metric"][3][3] == -1);
    REQUIRE(j["sigma"].size() == 4);
    CHECK(j["sigma"][0][0]["sign"] == 0);
    CHECK(j["sigma"][0][1]["sign"] == -1);
    CHECK(j["sigma"][0][1]["factors"] == nlohmann::json::array({"e_1"}));
}

TEST_CASE("unrolled vocabulary covers the level-1 display") {
    const AlgebraLevel l1 = make_level(1);
    const auto vocab = table_vocabulary(l1, true);
    const SpinTable sigma = spin_tensor(l1);
    // sigma_{01} = -imath jmath e_1 with the base e_1 = i
    CHECK(to_string(decompose(sigma.entries[0][1], vocab)) == "-iıȷ");
    CHECK(to_string(decompose(sigma.entries[1][2], vocab)) == "ı");
}
