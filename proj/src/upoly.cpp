#include "angwkb/upoly.hpp"

#include <sstream>

namespace angwkb {

namespace {
const ExactScalar kZero{};
}

UPoly::UPoly(ExactScalar constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly UPoly::monomial(int power, ExactScalar coeff) {
    UPoly p;
    if (!coeff.is_zero()) {
        p.c_.assign(static_cast<size_t>(power) + 1, ExactScalar{});
        p.c_.back() = std::move(coeff);
    }
    return p;
}

UPoly UPoly::from_coeffs(std::vector<ExactScalar> coeffs) {
    UPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

const ExactScalar& UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

double UPoly::eval(double u) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * u + it->to_double();
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, ExactScalar{});
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

UPoly UPoly::scaled(const ExactScalar& s) const {
    if (s.is_zero()) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

UPoly UPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), ExactScalar{});
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[k].str() << ")";
        if (k > 0) os << "*U^" << k;
        first = false;
    }
    return os.str();
}

} // namespace angwkb
