#ifndef CONFORMAL_ERRORS_HPP
#define CONFORMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conformal {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A matrix expected to be a scalar multiple of the identity is not.
struct NotScalar : std::domain_error {
    using std::domain_error::domain_error;
};

// Paravector on the null cone; no inverse, the point maps to infinity.
struct NullVector : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoMatch : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotClosed : std::logic_error {
    using std::logic_error::logic_error;
};

struct MapsToInfinity : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotParavector : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonFinite : std::domain_error {
    using std::domain_error::domain_error;
};

struct GridTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PoleOnGrid : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace conformal

#endif
