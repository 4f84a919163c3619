#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "angwkb/phase_algebra.hpp"

namespace angwkb {

// Cycle integrals of the phase derivatives around the branch cut joining
// the classical turning points. The path is an origin-centered ellipse
// that encloses both turning points and stays away from the cos z = 0
// poles at +-pi/2; w is evaluated by continuous branch tracking rather
// than by a fixed principal branch. Orientation is fixed so the leading
// cycle integral (the classical action) is positive.

struct TurningPoints {
    double xMinus = 0.0;
    double xPlus = 0.0;
    double kappa = 0.0; // sqrt(U/E) = cos(xPlus)
};

/// Zeros of E - U/cos^2(x); requires E > U > 0.
TurningPoints turning_points(double E, double U);

struct ContourPath {
    double a = 0.0;     // real semi-axis, xPlus < a < pi/2
    double b = 0.5;     // imaginary semi-axis, > 0
    int samples = 1024; // initial sample count, even, >= 256

    /// Ellipse with the real semi-axis midway between xPlus and pi/2.
    static ContourPath enclosing(const TurningPoints& tp, int samples = 1024, double b = 0.5);

    void validate(const TurningPoints& tp) const;
};

/// Keeps sqrt(w^2) continuous along a sampled path. The certificate is
/// that successive samples rotate by less than pi/4 (well under the pi/2
/// at which the sign choice becomes ambiguous); a wider jump means the
/// sampling is too coarse to identify the branch.
class BranchTracker {
public:
    /// Anchors at the principal branch (positive real just above the cut).
    std::complex<double> start(std::complex<double> w2);
    /// Tracked value, or nullopt when the continuity certificate fails.
    std::optional<std::complex<double>> step(std::complex<double> w2);

private:
    std::complex<double> prev_{};
};

struct CycleIntegral {
    double value = 0.0;        // real quantization contribution
    double imagResidual = 0.0; // magnitude of the component that must vanish
    int samplesUsed = 0;
};

/// Cycle integral of a phase expression, accepted only once doubling the
/// sample count moves the result by less than the acceptance gate.
/// Odd-parity expressions integrate to imaginary values in the
/// real-coefficient phase convention; the result is realigned to the
/// quantization branch in which the first odd order contributes -pi.
CycleIntegral contour_integral_full(const PhaseExpr& expr, double E, double U,
                                    const ContourPath& path);

/// Convenience wrapper returning only the realigned real value.
double contour_integral(const PhaseExpr& expr, double E, double U, const ContourPath& path);

struct IntegralReport {
    struct TermValue {
        int l = 0;
        double value = 0.0;
    };

    int n = 0;
    double E = 0.0;
    double U = 0.0;
    double numeric = 0.0;                // cycle integral of the full sigma_n'
    std::optional<double> closedForm;    // analytic value when one exists
    std::vector<TermValue> perTerm;      // canonical-coefficient pieces, n >= 1
    double lZeroContribution = 0.0;      // integral of the l = 0 piece alone
    double imagResidual = 0.0;
    int samplesUsed = 0;
};

/// Integrates sigma_n' (series[n]) as a whole and split into canonical
/// coefficient pieces; pairs even orders with the closed form
/// 2 pi * action_term(n/2, U).
IntegralReport integral_report(int n, double E, double U, std::span<const PhaseExpr> series,
                               std::optional<ContourPath> path = std::nullopt);

} // namespace angwkb
