#include "angwkb/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "angwkb/errors.hpp"

namespace angwkb {

ExactScalar::ExactScalar(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("ExactScalar: zero denominator");
    v_.canonicalize();
}

ExactScalar ExactScalar::from_string(const std::string& text) {
    try {
        mpq_class v(text, 10);
        v.canonicalize();
        return ExactScalar(std::move(v));
    } catch (const std::invalid_argument&) {
        throw DomainError("ExactScalar: cannot parse '" + text + "'");
    }
}

std::string ExactScalar::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw DomainError("ExactScalar: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    return os << x.str();
}

ExactScalar pow(const ExactScalar& base, int exp) {
    if (exp < 0) {
        if (base.is_zero()) throw DomainError("ExactScalar: 0 to negative power");
        return ExactScalar(1) / pow(base, -exp);
    }
    ExactScalar r(1);
    ExactScalar b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e != 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

} // namespace angwkb
