#pragma once

#include <span>
#include <string>
#include <vector>

#include "angwkb/rational.hpp"

namespace angwkb {

/// Polynomial in the reduced coupling U with exact rational coefficients.
/// Trailing zero coefficients are trimmed, so the zero polynomial has a
/// unique representation (empty coefficient list, degree -1).
class UPoly {
public:
    UPoly() = default;
    UPoly(ExactScalar constant); // NOLINT: implicit by design
    UPoly(long constant) : UPoly(ExactScalar(constant)) {}

    static UPoly monomial(int power, ExactScalar coeff);
    static UPoly from_coeffs(std::vector<ExactScalar> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of U^k; zero outside the stored range.
    const ExactScalar& coeff(int k) const;
    std::span<const ExactScalar> coeffs() const { return c_; }

    double eval(double u) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);

    UPoly scaled(const ExactScalar& s) const;
    /// Multiplies by U^k.
    UPoly shifted_up(int k) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<ExactScalar> c_; // c_[k] multiplies U^k
};

} // namespace angwkb
