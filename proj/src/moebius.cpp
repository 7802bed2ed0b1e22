#include "conformal/moebius.hpp"

#include <cmath>

#include "conformal/errors.hpp"
#include "conformal/tensors.hpp"

namespace conformal {

namespace {

std::vector<double> flatten(const BicMatrixF& m) {
    std::vector<double> v;
    v.reserve(static_cast<size_t>(m.dim()) * m.dim() * 4);
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) {
            const BicomplexF& x = m.at(r, c);
            v.push_back(x.re);
            v.push_back(x.im_i);
            v.push_back(x.im_j);
            v.push_back(x.im_ij);
        }
    return v;
}

// Solves the small SPD system G c = rhs in place.
std::vector<double> solve(std::vector<std::vector<double>> g, std::vector<double> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
        std::swap(g[piv], g[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = g[r][col] / g[col][col];
            for (int c = col; c < n; ++c) g[r][c] -= f * g[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        for (int c = r + 1; c < n; ++c) rhs[r] -= g[r][c] * rhs[c];
        rhs[r] /= g[r][r];
    }
    return rhs;
}

} // namespace

BicMatrixF embed_f(const AlgebraLevel& level, const std::vector<double>& coeffs) {
    if (static_cast<int>(coeffs.size()) != level.n)
        throw DimensionMismatch("paravector needs " + std::to_string(level.n) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    BicMatrixF m(level.matrix_dim());
    for (int mu = 0; mu < level.n; ++mu) {
        if (coeffs[static_cast<size_t>(mu)] == 0) continue;
        m = m + coeffs[static_cast<size_t>(mu)] * BicMatrixF::from_exact(level.basis(mu));
    }
    return m;
}

std::vector<double> project_paravector(const AlgebraLevel& level, const BicMatrixF& m,
                                       double tol) {
    const int n = level.n;
    std::vector<std::vector<double>> basis;
    basis.reserve(static_cast<size_t>(n));
    for (int mu = 0; mu < n; ++mu)
        basis.push_back(flatten(BicMatrixF::from_exact(level.basis(mu))));
    const std::vector<double> y = flatten(m);

    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            for (size_t k = 0; k < y.size(); ++k)
                gram[a][b] += basis[static_cast<size_t>(a)][k] * basis[static_cast<size_t>(b)][k];
        for (size_t k = 0; k < y.size(); ++k) rhs[a] += basis[static_cast<size_t>(a)][k] * y[k];
    }
    const std::vector<double> coeffs = solve(std::move(gram), std::move(rhs));

    double residual = 0;
    for (size_t k = 0; k < y.size(); ++k) {
        double r = y[k];
        for (int a = 0; a < n; ++a) r -= coeffs[static_cast<size_t>(a)] * basis[static_cast<size_t>(a)][k];
        residual = std::max(residual, std::abs(r));
    }
    if (residual > tol)
        throw NotParavector("off-span residual " + std::to_string(residual) + " exceeds " +
                            std::to_string(tol));
    return coeffs;
}

double pv_norm_f(const AlgebraLevel& level, const std::vector<double>& x) {
    const MetricTable g = metric(level);
    double norm = 0;
    for (int mu = 0; mu < level.n; ++mu)
        norm += to_double(g.g[mu][mu]) * x[static_cast<size_t>(mu)] * x[static_cast<size_t>(mu)];
    return norm;
}

BicMatrixF rotor(const AlgebraLevel& level, const std::vector<std::vector<double>>& omega) {
    const int n = level.n;
    if (static_cast<int>(omega.size()) != n)
        throw DimensionMismatch("omega must be " + std::to_string(n) + "x" + std::to_string(n));
    for (int mu = 0; mu < n; ++mu) {
        if (static_cast<int>(omega[static_cast<size_t>(mu)].size()) != n)
            throw DimensionMismatch("omega must be square");
        for (int nu = 0; nu < n; ++nu)
            if (std::abs(omega[static_cast<size_t>(mu)][static_cast<size_t>(nu)] +
                         omega[static_cast<size_t>(nu)][static_cast<size_t>(mu)]) > 1e-12)
                throw std::invalid_argument("omega is not antisymmetric");
    }

    const SpinTable s = spin_ops(level);
    BicMatrixF exponent(level.matrix_dim());
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu) {
            const double w = omega[static_cast<size_t>(mu)][static_cast<size_t>(nu)];
            if (w == 0) continue;
            exponent = exponent + w * BicMatrixF::from_exact(s.entries[mu][nu]);
        }
    return mexp(exponent);
}

std::vector<double> rotate(const AlgebraLevel& level, const BicMatrixF& r,
                           const std::vector<double>& x, double tol) {
    return project_paravector(level, r * embed_f(level, x) * dagger(r), tol);
}

VahlenMatrix vahlen_identity(const AlgebraLevel& level) {
    const int d = level.matrix_dim();
    return {BicMatrixF::identity(d), BicMatrixF(d), BicMatrixF(d), BicMatrixF::identity(d)};
}

namespace {

std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(to_double(r));
    return out;
}

} // namespace

VahlenMatrix vahlen_translation(const AlgebraLevel& level, const std::vector<Rational>& b) {
    VahlenMatrix v = vahlen_identity(level);
    v.b = embed_f(level, to_doubles(b));
    return v;
}

VahlenMatrix vahlen_dilation(const AlgebraLevel& level, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("dilation factor must be positive");
    VahlenMatrix v = vahlen_identity(level);
    v.a = lambda * v.a;
    return v;
}

VahlenMatrix vahlen_inversion(const AlgebraLevel& level) {
    const int d = level.matrix_dim();
    return {BicMatrixF(d), BicMatrixF::identity(d), BicMatrixF::identity(d), BicMatrixF(d)};
}

VahlenMatrix vahlen_special(const AlgebraLevel& level, const std::vector<Rational>& c) {
    VahlenMatrix v = vahlen_identity(level);
    v.c = embed_f(level, to_doubles(c));
    return v;
}

VahlenMatrix vahlen_compose(const VahlenMatrix& u, const VahlenMatrix& v) {
    return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d,
            u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d};
}

std::vector<double> moebius_apply(const AlgebraLevel& level, const VahlenMatrix& v,
                                  const std::vector<double>& x, double tol) {
    const BicMatrixF ex = embed_f(level, x);
    const BicMatrixF den = v.c * ex + v.d;
    const auto inv = try_inverse(den);
    if (!inv) throw MapsToInfinity("denominator c x + d is not invertible");
    return project_paravector(level, (v.a * ex + v.b) * (*inv), tol);
}

} // namespace conformal
