#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "angwkb/contour_integrator.hpp"
#include "angwkb/errors.hpp"
#include "angwkb/series_quantizer.hpp"

using namespace angwkb;

namespace {
constexpr double kPi = std::numbers::pi;
const double kE = 2.25;
const double kU = 0.75;
} // namespace

TEST_CASE("turning points") {
    const TurningPoints tp = turning_points(kE, kU);
    CHECK(tp.xPlus == doctest::Approx(0.9553166181245093).epsilon(1e-12));
    CHECK(tp.xMinus == doctest::Approx(-tp.xPlus));
    CHECK(tp.kappa == doctest::Approx(std::sqrt(kU / kE)));

    // coincident turning points as E approaches U from above
    CHECK(turning_points(kU + 1e-12, kU).xPlus == doctest::Approx(0.0).epsilon(1e-5));

    CHECK(turning_points(12.25, 0.75).xPlus ==
          doctest::Approx(1.3207634336960927).epsilon(1e-12));

    CHECK_THROWS_AS(turning_points(0.5, 0.75), DomainError);
    CHECK_THROWS_AS(turning_points(1.0, -1.0), DomainError);
}

TEST_CASE("contour path validation") {
    const TurningPoints tp = turning_points(kE, kU);
    CHECK_NOTHROW(ContourPath::enclosing(tp).validate(tp));
    ContourPath bad = ContourPath::enclosing(tp);
    bad.a = tp.xPlus * 0.5;
    CHECK_THROWS_AS(bad.validate(tp), DomainError);
    bad = ContourPath::enclosing(tp);
    bad.a = 1.7;
    CHECK_THROWS_AS(bad.validate(tp), DomainError);
    bad = ContourPath::enclosing(tp);
    bad.samples = 100;
    CHECK_THROWS_AS(bad.validate(tp), DomainError);
    bad = ContourPath::enclosing(tp);
    bad.b = 0.0;
    CHECK_THROWS_AS(bad.validate(tp), DomainError);
}

TEST_CASE("branch tracker flips signs for continuity and certifies jumps") {
    BranchTracker tr;
    const std::complex<double> w0 = tr.start({1.0, 0.0});
    CHECK(w0.real() == doctest::Approx(1.0));
    // slow rotation of w^2 keeps the tracked root continuous
    std::complex<double> prev = w0;
    for (int j = 1; j <= 100; ++j) {
        const double phase = 2.0 * kPi * j / 100.0; // one full turn of w^2
        const auto w = tr.step(std::polar(1.0, phase));
        REQUIRE(w.has_value());
        CHECK(std::abs(*w - prev) < 0.1);
        prev = *w;
    }
    // a full turn of w^2 flips the sign of the tracked square root
    CHECK(std::abs(prev + w0) == doctest::Approx(0.0).epsilon(1e-9));

    BranchTracker jumpy;
    jumpy.start({1.0, 0.0});
    CHECK_FALSE(jumpy.step({-1.0, 0.2}).has_value()); // near half-turn jump
}

TEST_CASE("leading cycle integral equals the classical action") {
    const auto series = wkb_series(0);
    const ContourPath path = ContourPath::enclosing(turning_points(kE, kU));
    const double expected = 2 * kPi * (std::sqrt(kE) - std::sqrt(kU)); // 3.98337986807
    CHECK(contour_integral(series[0], kE, kU, path) ==
          doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("first correction contributes -pi at any admissible parameters") {
    const auto series = wkb_series(1);
    for (double E : {2.25, 6.25, 12.25}) {
        const ContourPath path = ContourPath::enclosing(turning_points(E, kU));
        CHECK(contour_integral(series[1], E, kU, path) == doctest::Approx(-kPi).epsilon(1e-9));
    }
}

TEST_CASE("odd orders above the first integrate to zero") {
    const auto series = wkb_series(5);
    const ContourPath path = ContourPath::enclosing(turning_points(kE, kU));
    CHECK(std::abs(contour_integral(series[3], kE, kU, path)) < 1e-8);
    CHECK(std::abs(contour_integral(series[5], kE, kU, path)) < 1e-8);
}

TEST_CASE("even orders match the closed-form action terms") {
    const auto series = wkb_series(4);
    const ContourPath path = ContourPath::enclosing(turning_points(kE, kU));
    const double i2 = contour_integral(series[2], kE, kU, path);
    CHECK(i2 == doctest::Approx(-0.9068996821171088).epsilon(1e-9));
    CHECK(i2 == doctest::Approx(2 * kPi * action_term(1, kU)).epsilon(1e-9));
    const double i4 = contour_integral(series[4], kE, kU, path);
    CHECK(i4 == doctest::Approx(2 * kPi * action_term(2, kU)).epsilon(1e-7));
}

TEST_CASE("the action terms are independent of E") {
    const auto series = wkb_series(2);
    for (double E : {2.25, 12.25, 30.25}) {
        const ContourPath path = ContourPath::enclosing(turning_points(E, kU));
        CHECK(contour_integral(series[2], E, kU, path) ==
              doctest::Approx(2 * kPi * action_term(1, kU)).epsilon(1e-8));
    }
}

TEST_CASE("integral_report splits the cycle integral by cosine index") {
    const auto series = wkb_series(5);
    const IntegralReport rep = integral_report(2, kE, kU, series);
    CHECK(rep.numeric == doctest::Approx(-0.9068996821171088).epsilon(1e-8));
    REQUIRE(rep.closedForm.has_value());
    CHECK(*rep.closedForm == doctest::Approx(2 * kPi * action_term(1, kU)));
    CHECK(std::abs(rep.numeric - *rep.closedForm) < 1e-6);
    // everything beyond the l = 0 coefficient integrates away
    CHECK(std::abs(rep.numeric - rep.lZeroContribution) < 1e-8);
    for (const auto& term : rep.perTerm)
        if (term.l > 0) CHECK(std::abs(term.value) < 1e-8);

    const IntegralReport rep5 = integral_report(5, kE, kU, series);
    CHECK(std::abs(rep5.numeric) < 1e-8);
    REQUIRE(rep5.closedForm.has_value());
    CHECK(*rep5.closedForm == 0.0);

    CHECK_THROWS_AS(integral_report(9, kE, kU, series), DomainError);
}

TEST_CASE("path independence in the imaginary semi-axis") {
    const auto series = wkb_series(2);
    const TurningPoints tp = turning_points(kE, kU);
    const double v1 = contour_integral(series[2], kE, kU, ContourPath::enclosing(tp, 1024, 0.5));
    const double v2 = contour_integral(series[2], kE, kU, ContourPath::enclosing(tp, 1024, 1.0));
    CHECK(std::abs(v1 - v2) < 1e-8);
}

TEST_CASE("doubling acceptance reports the sample count actually used") {
    const auto series = wkb_series(1);
    const ContourPath path = ContourPath::enclosing(turning_points(kE, kU), 256);
    const CycleIntegral ci = contour_integral_full(series[1], kE, kU, path);
    CHECK(ci.samplesUsed >= 512);
    CHECK(ci.imagResidual < 1e-6 * (1.0 + std::abs(ci.value)));
}
