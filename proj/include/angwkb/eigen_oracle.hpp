#pragma once

#include <utility>

namespace angwkb {

// Brute-force eigenvalues of -F'' + U/cos^2(x) F = E F on (-pi/2, pi/2),
// U = m^2 - 1/4, by two-sided Numerov shooting. The potential diverges at
// the endpoints, so integration starts a distance edgeOffset inside with
// the regular Frobenius behaviour F ~ t^(m+1/2) (1 + c1 t^2); a plain
// zero boundary condition there would poison the convergence order.

struct OracleConfig {
    int gridPoints = 10000;    // >= 2000
    double matchPoint = 0.0;   // strictly inside the truncated interval
    double bracketWidth = 0.4; // initial energy half-bracket
    double tolerance = 1e-10;  // energy convergence target
    double edgeOffset = 1e-3;  // start distance from +-pi/2, in (0, 0.1)

    void validate() const;
};

struct OracleResult {
    int m = 0;
    int l = 0;
    double E = 0.0;
    double lambda2 = 0.0; // E - 1/4
    int nodeCount = 0;    // must equal l - m
    bool converged = false;
};

/// Normalized log-derivative mismatch of the two shooting solutions at the
/// match point (a Wronskian scaled into [-1, 1]); zero at eigenvalues.
double shoot_mismatch(double E, int m, const OracleConfig& cfg = {});

/// Eigenvalue with l - m nodes, bracketed around the semiclassical guess
/// (l + 1/2)^2 and refined by bisection plus a secant polish.
OracleResult solve_level(int m, int l, const OracleConfig& cfg = {});

/// Converged eigenfunction sampled at -x and +x (sign pattern only; the
/// overall normalization is arbitrary). Used for parity checks.
std::pair<double, double> eigenfunction_pair(int m, int l, double x,
                                             const OracleConfig& cfg = {});

} // namespace angwkb
