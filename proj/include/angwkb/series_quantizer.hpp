#pragma once

#include <utility>

#include "angwkb/rational.hpp"

namespace angwkb {

// Quantization of the angular eigenvalue problem reduced to
// -F'' + U/cos^2(x) F = E F with U = m^2 - 1/4 and E = lambda^2 + 1/4.
// The cycle condition fixes sqrt(E) as the node number n_theta plus the
// turning-point phase plus a series of corrections in inverse powers of
// sqrt(4U); summing the series in closed form gives lambda^2 = l(l+1)
// with l = n_theta + m.

struct ProblemParams {
    int m = 1;       // azimuthal quantum number, >= 1
    double u = 0.75; // m^2 - 1/4
    int nTheta = 0;  // node number, >= 0

    ProblemParams(int m, int nTheta);
};

struct QuantizationRecord {
    int order = 0;            // number of k >= 1 correction terms; -1 marks the summed record
    double energy = 0.0;      // E_N
    double lambda2 = 0.0;     // E_N - 1/4
    double lambda2Exact = 0.0; // l(l+1), l = nTheta + m
    double residual = 0.0;    // |lambda2 - lambda2Exact|
};

/// (U, E) from the angular parameters; m >= 0 is accepted here so the
/// oracle-side mapping can use it too.
std::pair<double, double> reduce_parameters(int m, double lambda2);

double lambda2_from_energy(double E);
double energy_from_lambda2(double lambda2);

/// k-th correction to the cycle integral divided by 2 pi:
///   -(1/2) binomial(1/2, k) (4U)^((1-2k)/2), k >= 1.
/// Requires 4U > 1 (the convergence domain of the resummed series).
double action_term(int k, double U);

/// Solves the cycle condition truncated after N correction terms; the
/// turning-point phase and the leading integral are always included.
QuantizationRecord partial_sum_energy(const ProblemParams& p, int N);

/// Closed resummation of the full series; exact up to rounding.
QuantizationRecord summed_quantization(const ProblemParams& p);

/// Leading-order (large-U) result (l + 1/2)^2; exceeds the exact
/// eigenvalue by exactly 1/4.
double torus_limit(const ProblemParams& p);

} // namespace angwkb
