#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "angwkb/upoly.hpp"

namespace angwkb {

// Exact term algebra over {c = cos x, s = sin x, w} with U-polynomial
// coefficients, closed under the relations s^2 = 1 - c^2 and
// w^2 = E - U c^-2 (E never appears explicitly; it is eliminated through
// the second relation). w is the leading phase derivative: w' = -U s c^-3 w^-1.
//
// The engine stores one real expression h_n per order. In the exponent
// convention the odd-order phases are imaginary; writing
// sigma_n' = h_n (n even), sigma_n' = -i h_n (n odd) keeps every
// coefficient rational. The factors of i reappear as parity-dependent
// signs inside wkb_recursion_step and as the realignment of odd-order
// cycle integrals in the contour module.

/// Default deepest order the exact recursion is driven to.
inline constexpr int kMaxOrder = 12;

/// Sine-power parity f(n) of the order-n phase derivative.
inline int sin_parity(int n) { return n % 2; }

/// w-power of the canonical order-n phase derivative.
inline int canonical_w_pow(int n) { return 1 - 3 * n; }

/// Largest cosine index g(n) in the canonical form, n >= 1.
inline int max_cos_index(int n) { return (n % 2 == 0) ? (3 * n - 2) / 2 : (3 * n - 3) / 2; }

struct TermKey {
    int cosPow = 0;
    int sinPow = 0;
    int wPow = 0;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// One monomial coeff(U) * c^cosPow * s^sinPow * w^wPow.
struct PhaseTerm {
    UPoly coeff;
    int cosPow = 0;
    int sinPow = 0;
    int wPow = 0;

    TermKey key() const { return {cosPow, sinPow, wPow}; }
    friend bool operator==(const PhaseTerm&, const PhaseTerm&) = default;
};

/// Sum of phase terms. Canonical form (produced by normalize and by every
/// operation below): sinPow in {0,1}, no zero coefficients, terms sorted
/// by (cosPow, sinPow, wPow) with distinct keys, so equality is structural.
class PhaseExpr {
public:
    PhaseExpr() = default;

    /// Wraps raw terms without normalizing.
    static PhaseExpr from_terms(std::vector<PhaseTerm> terms);
    static PhaseExpr term(UPoly coeff, int cosPow, int sinPow, int wPow);
    /// sigma_0' itself, the atom w.
    static PhaseExpr atom_w();

    const std::vector<PhaseTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const PhaseExpr& a, const PhaseExpr& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    std::vector<PhaseTerm> terms_;
};

/// Rewrites s^2 -> 1 - c^2 exhaustively, collects like terms, drops zero
/// terms and orders the rest. Idempotent.
PhaseExpr normalize(const PhaseExpr& expr);

/// d/dx with dc = -s, ds = c, dw = -U s c^-3 w^-1 (E held constant).
PhaseExpr differentiate(const PhaseExpr& expr);

/// Exact distributive product.
PhaseExpr multiply(const PhaseExpr& a, const PhaseExpr& b);

PhaseExpr add(const PhaseExpr& a, const PhaseExpr& b);
PhaseExpr scale(const PhaseExpr& a, const ExactScalar& s);

/// Next phase derivative from history = [sigma_0' .. sigma_{n-1}'];
/// history[0] must be the atom w. Division by w is exact (wPow decrement).
PhaseExpr wkb_recursion_step(std::span<const PhaseExpr> history);

/// [sigma_0' .. sigma_maxOrder'] by repeated recursion steps.
std::vector<PhaseExpr> wkb_series(int maxOrder);

/// Order-n phase derivative in the certified shape
///   w^(1-3n) * sum_l C_{n,l} cos^(2l-3n) x * sin^f(n) x,
/// obtained by pulling every term down to the base w-power with
/// w^2 = E - U c^-2. The coefficients C_{n,l} are polynomials in E with
/// U-polynomial coefficients; C_{n,0} is always E-free.
struct CanonicalPhase {
    struct Coefficient {
        int l = 0;
        std::vector<UPoly> byEPow; // byEPow[d] multiplies E^d; trailing zeros trimmed
    };

    int n = 0;
    int wPow = 0;      // always 1 - 3n
    int sinParity = 0; // always f(n)
    std::vector<Coefficient> coefficients; // sorted by l, only nonzero entries

    const Coefficient* find(int l) const;
    /// E-free l = 0 coefficient; zero polynomial when absent.
    UPoly c0() const;
    double eval_coefficient(int l, double E, double U) const;
    double eval(double x, double E, double U) const;
};

/// Verifies the canonical shape of a recursion output at order n >= 1 and
/// reads off the coefficient table. Throws StructureViolation when any
/// term falls outside the shape.
CanonicalPhase extract_canonical(const PhaseExpr& expr, int n);

/// Closed form of C_{n,0} for even n = 2k >= 2:
///   (-1)^k (U/2)^(2k) * binomial(1/2, k), exact.
UPoly closed_form_c0(int n);

/// binomial(1/2, k) as an exact rational.
ExactScalar binomial_half(int k);

/// Evaluates at real x inside the classically allowed region,
/// with w = +sqrt(E - U/cos^2 x).
double eval(const PhaseExpr& expr, double x, double E, double U);

/// Evaluates at complex z with an externally tracked branch value of w.
std::complex<double> eval(const PhaseExpr& expr, std::complex<double> z,
                          std::complex<double> w, double U);

/// Serialized coefficient tables: JSON array of
///   {n, wPow, sinParity, C: [{l, poly}]}
/// where poly[d][k] is the "p/q" string multiplying E^d U^k.
std::string coefficient_dump(std::span<const CanonicalPhase> tables);

} // namespace angwkb
