#include "conformal/bicomplex.hpp"

#include <sstream>

namespace conformal {

std::pair<Bicomplex, Bicomplex> null_units() {
    const Rational half(1, 2);
    Bicomplex o(0, half, half, 0);
    Bicomplex obar(0, -half, half, 0);
    return {o, obar};
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Rational& c, const char* unit) {
    if (c.is_zero()) return;
    Rational a = c;
    if (!first) {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    } else if (a < 0) {
        out << "-";
        a = -a;
    }
    first = false;
    if (*unit == '\0') {
        out << a.str();
    } else if (a == 1) {
        out << unit;
    } else {
        out << a.str() << " " << unit;
    }
}

} // namespace

std::string to_string(const Bicomplex& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    append_term(out, first, a.re, "");
    append_term(out, first, a.im_i, "i");
    append_term(out, first, a.im_j, "j");
    append_term(out, first, a.im_ij, "ij");
    return out.str();
}

} // namespace conformal
