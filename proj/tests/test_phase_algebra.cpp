#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "angwkb/errors.hpp"
#include "angwkb/phase_algebra.hpp"

using namespace angwkb;

namespace {

const double kE = 2.25;
const double kU = 0.75;

PhaseExpr sigma1() {
    // U/2 * s * c^-3 * w^-2
    return PhaseExpr::term(UPoly::monomial(1, ExactScalar(1, 2)), -3, 1, -2);
}

} // namespace

TEST_CASE("normalize rewrites sine powers down to parity") {
    // s^2 -> 1 - c^2
    const PhaseExpr raw = PhaseExpr::term(UPoly(1), 0, 2, 0);
    const PhaseExpr expected =
        add(PhaseExpr::term(UPoly(1), 0, 0, 0), PhaseExpr::term(UPoly(-1), 2, 0, 0));
    CHECK(normalize(raw) == expected);

    // already canonical input is untouched
    CHECK(normalize(expected) == expected);

    // U s^3 c^-1 w^-2 -> U s c^-1 w^-2 - U s c w^-2
    const PhaseExpr cubic = PhaseExpr::term(UPoly::monomial(1, ExactScalar(1)), -1, 3, -2);
    const PhaseExpr split = add(PhaseExpr::term(UPoly::monomial(1, ExactScalar(1)), -1, 1, -2),
                                PhaseExpr::term(UPoly::monomial(1, ExactScalar(-1)), 1, 1, -2));
    CHECK(normalize(cubic) == split);
    const double x = 0.3, u = 2.0, e = 9.0;
    CHECK(eval(cubic, x, e, u) == doctest::Approx(eval(split, x, e, u)).epsilon(1e-12));
}

TEST_CASE("normalize collects like terms and drops zeros") {
    const PhaseExpr twice = add(PhaseExpr::term(UPoly(1), 1, 0, 0),
                                PhaseExpr::term(UPoly(1), 1, 0, 0));
    CHECK(normalize(twice) == PhaseExpr::term(UPoly(2), 1, 0, 0));
    const PhaseExpr cancel = add(PhaseExpr::term(UPoly(1), 1, 0, 0),
                                 PhaseExpr::term(UPoly(-1), 1, 0, 0));
    CHECK(normalize(cancel).is_zero());
}

TEST_CASE("differentiate: core rules") {
    // d/dx w = -U s c^-3 w^-1
    CHECK(differentiate(PhaseExpr::atom_w()) ==
          PhaseExpr::term(UPoly::monomial(1, ExactScalar(-1)), -3, 1, -1));
    // d/dx c^-2 = 2 s c^-3
    CHECK(differentiate(PhaseExpr::term(UPoly(1), -2, 0, 0)) ==
          PhaseExpr::term(UPoly(2), -3, 1, 0));
    // d/dx 1 = 0
    CHECK(differentiate(PhaseExpr::term(UPoly(1), 0, 0, 0)).is_zero());
}

TEST_CASE("differentiate of w matches central finite differences") {
    const double x = 0.4, h = 1e-6;
    const double fd = (eval(PhaseExpr::atom_w(), x + h, kE, kU) -
                       eval(PhaseExpr::atom_w(), x - h, kE, kU)) /
                      (2 * h);
    const double an = eval(differentiate(PhaseExpr::atom_w()), x, kE, kU);
    CHECK(an == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("multiply: products of atoms") {
    // w * w = w^2
    CHECK(multiply(PhaseExpr::atom_w(), PhaseExpr::atom_w()) ==
          PhaseExpr::term(UPoly(1), 0, 0, 2));
    // (U/2 s c^-3 w^-2)^2 = U^2/4 c^-6 w^-4 - U^2/4 c^-4 w^-4
    const PhaseExpr sq = multiply(sigma1(), sigma1());
    const PhaseExpr expected =
        add(PhaseExpr::term(UPoly::monomial(2, ExactScalar(1, 4)), -6, 0, -4),
            PhaseExpr::term(UPoly::monomial(2, ExactScalar(-1, 4)), -4, 0, -4));
    CHECK(sq == expected);
    // a * 0 = 0
    CHECK(multiply(sigma1(), PhaseExpr{}).is_zero());
}

TEST_CASE("recursion step reproduces the displayed low orders") {
    auto series = wkb_series(3);
    CHECK(series[1] == sigma1());

    const CanonicalPhase c2 = extract_canonical(series[2], 2);
    CHECK(c2.wPow == -5);
    CHECK(c2.sinParity == 0);
    CHECK(c2.c0() == UPoly::monomial(2, ExactScalar(-1, 8)));

    const CanonicalPhase c3 = extract_canonical(series[3], 3);
    CHECK(c3.wPow == -8);
    CHECK(c3.sinParity == 1);
    CHECK(c3.c0().is_zero());
}

TEST_CASE("recursion step preconditions") {
    CHECK_THROWS_AS(wkb_recursion_step({}), DomainError);
    const std::vector<PhaseExpr> bad{sigma1()};
    CHECK_THROWS_AS(wkb_recursion_step(bad), DomainError);
}

TEST_CASE("canonical extraction certifies the shape up to order 8") {
    const auto series = wkb_series(8);
    for (int n = 1; n <= 8; ++n) {
        const CanonicalPhase c = extract_canonical(series[n], n);
        CHECK(c.wPow == 1 - 3 * n);
        CHECK(c.sinParity == n % 2);
        for (const auto& coeff : c.coefficients) {
            CHECK(coeff.l >= 0);
            CHECK(coeff.l <= max_cos_index(n));
        }
    }
}

TEST_CASE("sigma1 canonical table") {
    const auto series = wkb_series(1);
    const CanonicalPhase c1 = extract_canonical(series[1], 1);
    CHECK(c1.n == 1);
    CHECK(c1.wPow == -2);
    CHECK(c1.sinParity == 1);
    REQUIRE(c1.coefficients.size() == 1);
    CHECK(c1.c0() == UPoly::monomial(1, ExactScalar(1, 2)));
}

TEST_CASE("closed form of C_{2k,0}") {
    CHECK(closed_form_c0(2) == UPoly::monomial(2, ExactScalar(-1, 8)));
    CHECK(closed_form_c0(4) == UPoly::monomial(4, ExactScalar(-1, 128)));
    CHECK(closed_form_c0(6) == UPoly::monomial(6, ExactScalar(-1, 1024)));
    CHECK_THROWS_AS(closed_form_c0(3), DomainError);
    CHECK_THROWS_AS(closed_form_c0(0), DomainError);
}

TEST_CASE("extracted C_{n,0} matches the closed form exactly") {
    const auto series = wkb_series(8);
    for (int n = 2; n <= 8; n += 2)
        CHECK(extract_canonical(series[n], n).c0() == closed_form_c0(n));
    for (int n = 3; n <= 7; n += 2)
        CHECK(extract_canonical(series[n], n).c0().is_zero());
}

TEST_CASE("canonical form and raw recursion output agree numerically") {
    const auto series = wkb_series(8);
    for (int n = 1; n <= 8; ++n) {
        const CanonicalPhase c = extract_canonical(series[n], n);
        for (double x : {0.2, 0.5, 0.8}) {
            const double raw = eval(series[n], x, kE, kU);
            const double canon = c.eval(x, kE, kU);
            CHECK(std::abs(raw - canon) <= 1e-10 * std::max(1.0, std::abs(canon)));
        }
    }
}

TEST_CASE("differentiate agrees with finite differences on every order") {
    const auto series = wkb_series(6);
    const double x = 0.4, h = 1e-5;
    for (int n = 0; n <= 6; ++n) {
        const double fd =
            (eval(series[n], x + h, kE, kU) - eval(series[n], x - h, kE, kU)) / (2 * h);
        const double an = eval(differentiate(series[n]), x, kE, kU);
        CHECK(std::abs(an - fd) <= 1e-6 * std::max(1.0, std::abs(an)));
    }
}

TEST_CASE("structure violations abort loudly") {
    const auto series = wkb_series(2);
    // wrong sine parity for its order
    CHECK_THROWS_AS(extract_canonical(series[2], 3), StructureViolation);
    // a w power below the canonical base
    const PhaseExpr tooDeep = add(series[1], PhaseExpr::term(UPoly(1), -3, 1, -4));
    CHECK_THROWS_AS(extract_canonical(tooDeep, 1), StructureViolation);
    // a cosine index beyond g(n)
    const PhaseExpr wideCos = add(series[1], PhaseExpr::term(UPoly(1), 1, 1, -2));
    CHECK_THROWS_AS(extract_canonical(wideCos, 1), StructureViolation);
}

TEST_CASE("binomial_half recurrence") {
    CHECK(binomial_half(0) == ExactScalar(1));
    CHECK(binomial_half(1) == ExactScalar(1, 2));
    CHECK(binomial_half(2) == ExactScalar(-1, 8));
    CHECK(binomial_half(3) == ExactScalar(1, 16));
    CHECK(binomial_half(4) == ExactScalar(-5, 128));
}

TEST_CASE("coefficient dump is valid JSON with p/q strings") {
    const auto series = wkb_series(2);
    std::vector<CanonicalPhase> tables;
    for (int n = 1; n <= 2; ++n) tables.push_back(extract_canonical(series[n], n));
    const std::string json = coefficient_dump(tables);
    CHECK(json.find("\"n\": 1") != std::string::npos);
    CHECK(json.find("\"wPow\": -2") != std::string::npos);
    CHECK(json.find("\"sinParity\": 1") != std::string::npos);
    // C_{1,0} = U/2 serializes as ["0/1", "1/2"] in the E^0 row
    CHECK(json.find("\"0/1\"") != std::string::npos);
    CHECK(json.find("\"1/2\"") != std::string::npos);
    // C_{2,0} = -U^2/8
    CHECK(json.find("\"-1/8\"") != std::string::npos);
}
