#include "conformal/tower.hpp"

#include "conformal/errors.hpp"

namespace conformal {

BicMatrix AlgebraLevel::basis(int mu) const {
    if (mu < 0 || mu >= n)
        throw DimensionMismatch("basis index " + std::to_string(mu) + " out of range for n=" +
                                std::to_string(n));
    if (mu == 0) return BicMatrix::identity(matrix_dim());
    return generators[static_cast<size_t>(mu) - 1];
}

AlgebraLevel base_level() {
    AlgebraLevel lv;
    lv.level = 0;
    lv.n = 2;
    BicMatrix e1(1);
    e1.at(0, 0) = Bicomplex::unit_i();
    lv.generators.push_back(e1);
    lv.sig_plus = 2;
    lv.sig_minus = 0;
    return lv;
}

BicMatrix imath_unit() {
    BicMatrix m(2);
    m.at(0, 1) = Bicomplex::one();
    m.at(1, 0) = -Bicomplex::one();
    return m;
}

BicMatrix jmath_unit() {
    BicMatrix m(2);
    m.at(0, 1) = Bicomplex::one();
    m.at(1, 0) = Bicomplex::one();
    return m;
}

AlgebraLevel compactify(const AlgebraLevel& level) {
    const int d = level.matrix_dim();
    const BicMatrix id = BicMatrix::identity(d);
    const BicMatrix ij_block = imath_unit() * jmath_unit(); // diag(1, -1)

    AlgebraLevel out;
    out.level = level.level + 1;
    out.n = level.n + 2;
    out.sig_plus = level.sig_plus + 1;
    out.sig_minus = level.sig_minus + 1;

    for (const auto& e : level.generators) out.generators.push_back(kron(ij_block, e));
    out.generators.push_back(Bicomplex::unit_i() * kron(jmath_unit(), id));
    out.generators.push_back(Bicomplex::unit_j() * kron(imath_unit(), id));
    return out;
}

AlgebraLevel make_level(int L) {
    AlgebraLevel lv = base_level();
    for (int k = 0; k < L; ++k) lv = compactify(lv);
    return lv;
}

std::shared_ptr<const AlgebraLevel> level_ptr(int L) {
    return std::make_shared<const AlgebraLevel>(make_level(L));
}

Paravector make_paravector(std::shared_ptr<const AlgebraLevel> level,
                           std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != level->n)
        throw DimensionMismatch("paravector needs " + std::to_string(level->n) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    return Paravector{std::move(level), std::move(coeffs)};
}

BicMatrix embed(const AlgebraLevel& level, const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) != level.n)
        throw DimensionMismatch("paravector needs " + std::to_string(level.n) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    BicMatrix m = BicMatrix::scalar(level.matrix_dim(), Bicomplex(coeffs[0]));
    for (int k = 1; k < level.n; ++k) {
        if (coeffs[static_cast<size_t>(k)].is_zero()) continue;
        m = m + coeffs[static_cast<size_t>(k)] * level.generators[static_cast<size_t>(k) - 1];
    }
    return m;
}

BicMatrix embed(const Paravector& p) { return embed(*p.level, p.x); }

Rational pv_norm(const Paravector& p) {
    const BicMatrix m = embed(p);
    const Bicomplex s = as_scalar(m * bar(m));
    if (!s.is_real()) throw NotScalar("paravector norm has imaginary components");
    return s.re;
}

Paravector pv_inverse(const Paravector& p) {
    const Rational norm = pv_norm(p);
    if (norm.is_zero()) throw NullVector("paravector on the null cone has no inverse");
    std::vector<Rational> coeffs;
    coeffs.reserve(p.x.size());
    coeffs.push_back(p.x[0] / norm);
    for (size_t k = 1; k < p.x.size(); ++k) coeffs.push_back(-p.x[k] / norm);
    return Paravector{p.level, std::move(coeffs)};
}

} // namespace conformal
