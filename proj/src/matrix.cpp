#include "conformal/matrix.hpp"

#include <sstream>

namespace conformal {

namespace {

void require_same_dim(const BicMatrix& a, const BicMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

} // namespace

BicMatrix BicMatrix::identity(int dim) {
    BicMatrix m(dim);
    for (int k = 0; k < dim; ++k) m.at(k, k) = Bicomplex::one();
    return m;
}

BicMatrix BicMatrix::scalar(int dim, const Bicomplex& lambda) {
    BicMatrix m(dim);
    for (int k = 0; k < dim; ++k) m.at(k, k) = lambda;
    return m;
}

bool BicMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

BicMatrix BicMatrix::operator-() const {
    BicMatrix m(dim_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

BicMatrix operator+(const BicMatrix& a, const BicMatrix& b) {
    require_same_dim(a, b);
    BicMatrix m(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

BicMatrix operator-(const BicMatrix& a, const BicMatrix& b) {
    require_same_dim(a, b);
    BicMatrix m(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
    return m;
}

BicMatrix operator*(const BicMatrix& a, const BicMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim_;
    BicMatrix m(n);
    // Tower matrices are sparse; skip zero entries.
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Bicomplex& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                const Bicomplex& bkc = b.at(k, c);
                if (bkc.is_zero()) continue;
                m.at(r, c) += ark * bkc;
            }
        }
    }
    return m;
}

BicMatrix operator*(const Bicomplex& c, const BicMatrix& a) {
    BicMatrix m(a.dim_);
    for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = c * a.e_[k];
    return m;
}

BicMatrix operator*(const Rational& c, const BicMatrix& a) {
    return Bicomplex(c) * a;
}

BicMatrix bar(const BicMatrix& a) {
    BicMatrix m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m.at(r, c) = bar(a.at(c, r));
    return m;
}

BicMatrix dagger(const BicMatrix& a) {
    BicMatrix m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m.at(r, c) = dagger(a.at(c, r));
    return m;
}

BicMatrix hat(const BicMatrix& a) {
    BicMatrix m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m.at(r, c) = hat(a.at(r, c));
    return m;
}

BicMatrix kron(const BicMatrix& a, const BicMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    BicMatrix m(da * db);
    for (int ra = 0; ra < da; ++ra)
        for (int ca = 0; ca < da; ++ca) {
            const Bicomplex& f = a.at(ra, ca);
            if (f.is_zero()) continue;
            for (int rb = 0; rb < db; ++rb)
                for (int cb = 0; cb < db; ++cb)
                    m.at(ra * db + rb, ca * db + cb) = f * b.at(rb, cb);
        }
    return m;
}

BicMatrix commutator(const BicMatrix& a, const BicMatrix& b) {
    return a * b - b * a;
}

Bicomplex as_scalar(const BicMatrix& a) {
    const Bicomplex& lambda = a.at(0, 0);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            if (r == c) {
                if (a.at(r, c) != lambda)
                    throw NotScalar("diagonal entries differ at (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
            } else if (!a.at(r, c).is_zero()) {
                throw NotScalar("off-diagonal entry nonzero at (" + std::to_string(r) + "," +
                                std::to_string(c) + ")");
            }
        }
    return lambda;
}

std::string to_string(const BicMatrix& a) {
    std::ostringstream out;
    for (int r = 0; r < a.dim(); ++r) {
        out << "[";
        for (int c = 0; c < a.dim(); ++c) {
            if (c) out << ", ";
            out << to_string(a.at(r, c));
        }
        out << "]";
        if (r + 1 < a.dim()) out << "\n";
    }
    return out.str();
}

} // namespace conformal
