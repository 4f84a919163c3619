#include "angwkb/series_quantizer.hpp"

#include <cmath>
#include <string>

#include "angwkb/errors.hpp"
#include "angwkb/phase_algebra.hpp"

namespace angwkb {

ProblemParams::ProblemParams(int m_, int nTheta_) : m(m_), nTheta(nTheta_) {
    if (m < 1)
        throw DomainError("ProblemParams: m must be >= 1, got " + std::to_string(m));
    if (nTheta < 0)
        throw DomainError("ProblemParams: nTheta must be >= 0, got " + std::to_string(nTheta));
    u = static_cast<double>(m) * m - 0.25;
    if (!(4.0 * u > 1.0))
        throw ConvergenceDomainError("ProblemParams: 4U > 1 required");
}

std::pair<double, double> reduce_parameters(int m, double lambda2) {
    if (m < 0) throw DomainError("reduce_parameters: m must be >= 0");
    return {static_cast<double>(m) * m - 0.25, lambda2 + 0.25};
}

double lambda2_from_energy(double E) { return E - 0.25; }
double energy_from_lambda2(double lambda2) { return lambda2 + 0.25; }

double action_term(int k, double U) {
    if (k < 1) throw DomainError("action_term: k must be >= 1");
    const double x2 = 4.0 * U;
    if (!(x2 > 1.0))
        throw ConvergenceDomainError("action_term: 4U > 1 required, got 4U = " +
                                     std::to_string(x2));
    // binomial(1/2,k) by exact recurrence, converted once; the alternating
    // rational coefficients would lose digits if built in floating point.
    const double bk = binomial_half(k).to_double();
    return -0.5 * bk * std::pow(x2, 0.5 - k);
}

namespace {
QuantizationRecord make_record(const ProblemParams& p, int order, double sqrtE) {
    QuantizationRecord r;
    r.order = order;
    r.energy = sqrtE * sqrtE;
    r.lambda2 = r.energy - 0.25;
    const double l = static_cast<double>(p.nTheta + p.m);
    r.lambda2Exact = l * (l + 1.0);
    r.residual = std::abs(r.lambda2 - r.lambda2Exact);
    return r;
}
} // namespace

QuantizationRecord partial_sum_energy(const ProblemParams& p, int N) {
    if (N < 0) throw DomainError("partial_sum_energy: N must be >= 0");
    // Only the leading cycle integral depends on E, so the truncated
    // condition solves in closed form:
    //   sqrt(E) = nTheta + 1/2 + sqrt(U) - sum_{k=1}^{N} action_term(k, U).
    double sqrtE = p.nTheta + 0.5 + std::sqrt(p.u);
    for (int k = 1; k <= N; ++k) sqrtE -= action_term(k, p.u);
    return make_record(p, N, sqrtE);
}

QuantizationRecord summed_quantization(const ProblemParams& p) {
    // Resummed correction series: sqrt(U) - sum_k action_term = (1/2) sqrt(1 + 4U).
    const double sqrtE = p.nTheta + 0.5 + 0.5 * std::sqrt(1.0 + 4.0 * p.u);
    return make_record(p, -1, sqrtE);
}

double torus_limit(const ProblemParams& p) {
    const double l = static_cast<double>(p.nTheta + p.m);
    return (l + 0.5) * (l + 0.5);
}

} // namespace angwkb
