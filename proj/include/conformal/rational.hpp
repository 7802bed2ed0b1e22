#ifndef CONFORMAL_RATIONAL_HPP
#define CONFORMAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace conformal {

// Exact rational scalar. cpp_rational keeps the canonical form
// (gcd(num, den) = 1, den > 0) after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace conformal

#endif
