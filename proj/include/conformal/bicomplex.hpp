#ifndef CONFORMAL_BICOMPLEX_HPP
#define CONFORMAL_BICOMPLEX_HPP

#include <string>
#include <utility>

#include "conformal/rational.hpp"

namespace conformal {

/// A bicomplex number w + x i + y j + z ij over exact rationals.
///
/// The two imaginary units commute and both square to -1, so the
/// hyperbolic unit ij squares to +1. The algebra is commutative and
/// associative; o and obar below are its zero divisors.
struct Bicomplex {
    Rational re;    // coefficient of 1
    Rational im_i;  // coefficient of i
    Rational im_j;  // coefficient of j
    Rational im_ij; // coefficient of ij

    Bicomplex() = default;
    Bicomplex(Rational w, Rational x = 0, Rational y = 0, Rational z = 0)
        : re(std::move(w)), im_i(std::move(x)), im_j(std::move(y)), im_ij(std::move(z)) {}

    static Bicomplex zero() { return {}; }
    static Bicomplex one() { return Bicomplex(1); }
    static Bicomplex unit_i() { return Bicomplex(0, 1); }
    static Bicomplex unit_j() { return Bicomplex(0, 0, 1); }
    static Bicomplex unit_ij() { return Bicomplex(0, 0, 0, 1); }

    bool is_zero() const {
        return re.is_zero() && im_i.is_zero() && im_j.is_zero() && im_ij.is_zero();
    }
    bool is_real() const { return im_i.is_zero() && im_j.is_zero() && im_ij.is_zero(); }

    friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.re == b.re && a.im_i == b.im_i && a.im_j == b.im_j && a.im_ij == b.im_ij;
    }
    friend bool operator!=(const Bicomplex& a, const Bicomplex& b) { return !(a == b); }

    Bicomplex operator-() const { return Bicomplex(-re, -im_i, -im_j, -im_ij); }

    Bicomplex& operator+=(const Bicomplex& o) {
        re += o.re;
        im_i += o.im_i;
        im_j += o.im_j;
        im_ij += o.im_ij;
        return *this;
    }
    Bicomplex& operator-=(const Bicomplex& o) {
        re -= o.re;
        im_i -= o.im_i;
        im_j -= o.im_j;
        im_ij -= o.im_ij;
        return *this;
    }

    friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }

    // Product under i^2 = j^2 = -1, ij = ji, (ij)^2 = +1.
    friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return Bicomplex(
            a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j + a.im_ij * b.im_ij,
            a.re * b.im_i + a.im_i * b.re - a.im_j * b.im_ij - a.im_ij * b.im_j,
            a.re * b.im_j + a.im_j * b.re - a.im_i * b.im_ij - a.im_ij * b.im_i,
            a.re * b.im_ij + a.im_ij * b.re + a.im_i * b.im_j + a.im_j * b.im_i);
    }
    Bicomplex& operator*=(const Bicomplex& o) { return *this = *this * o; }

    friend Bicomplex operator*(const Rational& c, const Bicomplex& a) {
        return Bicomplex(c * a.re, c * a.im_i, c * a.im_j, c * a.im_ij);
    }
};

/// Conjugation: i -> -i, j -> j, ij -> -ij.
inline Bicomplex bar(const Bicomplex& a) {
    return Bicomplex(a.re, -a.im_i, a.im_j, -a.im_ij);
}

/// Entrywise part of matrix reversion: i -> i, j -> -j, ij -> -ij.
inline Bicomplex dagger(const Bicomplex& a) {
    return Bicomplex(a.re, a.im_i, -a.im_j, -a.im_ij);
}

/// Entrywise part of the main involution: i -> -i, j -> -j, ij -> ij.
/// Equals bar composed with dagger.
inline Bicomplex hat(const Bicomplex& a) {
    return Bicomplex(a.re, -a.im_i, -a.im_j, a.im_ij);
}

/// The null-plane pair (o, obar) = ((i+j)/2, (j-i)/2), satisfying
/// oo = i o, obar obar = -i obar, o obar = 0.
std::pair<Bicomplex, Bicomplex> null_units();

/// Canonical rendering "w + x i + y j + z ij" with zero terms omitted.
std::string to_string(const Bicomplex& a);

} // namespace conformal

#endif
