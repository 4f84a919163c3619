#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace angwkb {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Arithmetic is exact; there is no rounding
/// anywhere in this type.
class ExactScalar {
public:
    ExactScalar() : v_(0) {}
    ExactScalar(long value) : v_(value) {} // NOLINT: implicit by design
    ExactScalar(long num, long den);
    explicit ExactScalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (decimal).
    static ExactScalar from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    /// Always "p/q", e.g. "-3/4", "5/1".
    std::string str() const;

    ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }

    ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

private:
    mpq_class v_;
};

/// base^exp for integer exp; negative exponents require a nonzero base.
ExactScalar pow(const ExactScalar& base, int exp);

} // namespace angwkb
