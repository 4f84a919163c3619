#pragma once

namespace angwkb {

// Supersymmetric quantization of the angular problem on theta in (0, pi).
// The superpotential comes from the sector ground state sin^m(theta):
// Phi = -(m + 1/2) cot(theta), partner potentials V+- = Phi^2 +- Phi',
// and the leading-order (CBC) condition
//   integral_a^b sqrt(E_minus - Phi^2) dtheta = nTheta * pi
// is already exact for this family.

struct SusyContext {
    int m = 1;
    double phiAmplitude = 1.5; // m + 1/2
    double groundEigen = 2.0;  // m (m + 1), eigenvalue of the sector ground state

    explicit SusyContext(int m);
};

struct CbcLevel {
    int nTheta = 0;
    double eMinus = 0.0;  // nTheta (nTheta + 2m + 1), >= 0 with equality iff nTheta = 0
    double lambda2 = 0.0; // eMinus + m(m+1) = (nTheta + m)(nTheta + m + 1)
    double turningA = 0.0;
    double turningB = 0.0; // turningA + turningB = pi for nTheta >= 1
};

/// Phi(theta) = -(m + 1/2) cot(theta), 0 < theta < pi.
double susy_potential(const SusyContext& ctx, double theta);

/// (V-, V+) = (Phi^2 - Phi', Phi^2 + Phi') with Phi' = (m + 1/2)/sin^2(theta).
struct PartnerPotentials {
    double vMinus = 0.0;
    double vPlus = 0.0;
};
PartnerPotentials partner_potentials(const SusyContext& ctx, double theta);

/// Roots of E_minus - Phi^2 = 0: a = arctan((m + 1/2)/sqrt(E_minus)) and
/// b = pi - a. E_minus = 0 degenerates to a = b = pi/2.
struct CbcTurning {
    double a = 0.0;
    double b = 0.0;
    bool degenerate = false; // well collapsed to the point pi/2
};
CbcTurning cbc_turning_points(const SusyContext& ctx, double eMinus);

/// Quadrature of sqrt(E_minus - Phi^2) between the turning points, with a
/// sine substitution that flattens the square-root endpoints; accepted
/// only once doubling the node count moves the result by < 1e-9.
double cbc_integral(const SusyContext& ctx, double eMinus);

/// Level nTheta of the partner problem, shifted back to lambda^2 by the
/// ground eigenvalue m(m+1); exact in integer arithmetic.
CbcLevel swkb_spectrum(const SusyContext& ctx, int nTheta);

/// Residual of the partner Hamiltonian applied to the zero mode
/// sin^(m+1/2)(theta): -F0'' + V- F0, with the second derivative taken by
/// Richardson-extrapolated central differences.
double zero_mode_residual(const SusyContext& ctx, double theta);

} // namespace angwkb
