#include "conformal/matrixf.hpp"

#include <algorithm>
#include <cmath>

namespace conformal {

namespace {

void require_same_dim(const BicMatrixF& a, const BicMatrixF& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat component(const BicMatrixF& a, bool plus) {
    const int n = a.dim();
    CMat m(n, std::vector<std::complex<double>>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m[r][c] = plus ? a.at(r, c).plus_part() : a.at(r, c).minus_part();
    return m;
}

// Gauss-Jordan with partial pivoting; empty on (near-)singular input.
std::optional<CMat> cinverse(CMat m) {
    const int n = static_cast<int>(m.size());
    CMat inv(n, std::vector<std::complex<double>>(n));
    for (int k = 0; k < n; ++k) inv[k][k] = 1.0;

    double scale = 0;
    for (const auto& row : m)
        for (const auto& x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0) return std::nullopt;
    const double tol = scale * 1e-12;

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) <= tol) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const std::complex<double> d = m[col][col];
        for (int c = 0; c < n; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const std::complex<double> f = m[r][col];
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace

BicMatrixF BicMatrixF::identity(int dim) {
    BicMatrixF m(dim);
    for (int k = 0; k < dim; ++k) m.at(k, k) = BicomplexF(1);
    return m;
}

BicMatrixF BicMatrixF::from_exact(const BicMatrix& a) {
    BicMatrixF m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m.at(r, c) = BicomplexF::from_exact(a.at(r, c));
    return m;
}

double BicMatrixF::max_abs() const {
    double v = 0;
    for (const auto& x : e_) v = std::max(v, x.abs1());
    return v;
}

bool BicMatrixF::finite() const {
    for (const auto& x : e_)
        if (!std::isfinite(x.re) || !std::isfinite(x.im_i) || !std::isfinite(x.im_j) ||
            !std::isfinite(x.im_ij))
            return false;
    return true;
}

BicMatrixF BicMatrixF::operator-() const {
    BicMatrixF m(dim_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

BicMatrixF operator+(const BicMatrixF& a, const BicMatrixF& b) {
    require_same_dim(a, b);
    BicMatrixF m(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

BicMatrixF operator-(const BicMatrixF& a, const BicMatrixF& b) {
    require_same_dim(a, b);
    BicMatrixF m(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
    return m;
}

BicMatrixF operator*(const BicMatrixF& a, const BicMatrixF& b) {
    require_same_dim(a, b);
    const int n = a.dim_;
    BicMatrixF m(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k)
            for (int c = 0; c < n; ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    return m;
}

BicMatrixF operator*(double c, const BicMatrixF& a) {
    BicMatrixF m(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = c * a.e_[k];
    return m;
}

BicMatrixF bar(const BicMatrixF& a) {
    BicMatrixF m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            const BicomplexF& x = a.at(c, r);
            m.at(r, c) = {x.re, -x.im_i, x.im_j, -x.im_ij};
        }
    return m;
}

BicMatrixF dagger(const BicMatrixF& a) {
    BicMatrixF m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            const BicomplexF& x = a.at(c, r);
            m.at(r, c) = {x.re, x.im_i, -x.im_j, -x.im_ij};
        }
    return m;
}

BicMatrixF hat(const BicMatrixF& a) {
    BicMatrixF m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            const BicomplexF& x = a.at(r, c);
            m.at(r, c) = {x.re, -x.im_i, -x.im_j, x.im_ij};
        }
    return m;
}

BicMatrixF mexp(const BicMatrixF& a) {
    if (!a.finite()) throw NonFinite("mexp: non-finite input");
    const int n = a.dim();

    int squarings = 0;
    double norm = a.max_abs() * n;
    while (norm > 0.5 && squarings < 64) {
        norm /= 2;
        ++squarings;
    }
    BicMatrixF x = std::ldexp(1.0, -squarings) * a;

    BicMatrixF result = BicMatrixF::identity(n);
    BicMatrixF term = BicMatrixF::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = (1.0 / k) * (term * x);
        result = result + term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    if (!result.finite()) throw NonFinite("mexp: overflow");
    return result;
}

std::optional<BicMatrixF> try_inverse(const BicMatrixF& a) {
    auto p = cinverse(component(a, true));
    if (!p) return std::nullopt;
    auto q = cinverse(component(a, false));
    if (!q) return std::nullopt;
    const int n = a.dim();
    BicMatrixF m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = BicomplexF::from_parts((*p)[r][c], (*q)[r][c]);
    return m;
}

} // namespace conformal
