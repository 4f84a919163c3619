#include "angwkb/swkb.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "angwkb/errors.hpp"

namespace angwkb {

namespace {

constexpr double kPi = std::numbers::pi;

void check_interior(double theta, const char* where) {
    if (!(theta > 0.0 && theta < kPi))
        throw DomainError(std::string(where) + ": theta must lie strictly inside (0, pi)");
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// three-term recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double cbc_quadrature(const SusyContext& ctx, double eMinus, double a, double b, int nodes) {
    // theta = mid + hw sin(pi u / 2) maps u in [-1, 1] onto [a, b] and the
    // cosine Jacobian absorbs the inverse-square-root turning-point zeros.
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    std::vector<double> u, wt;
    gauss_legendre(nodes, u, wt);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double v = 0.5 * kPi * u[i];
        const double theta = mid + hw * std::sin(v);
        const double phi = -ctx.phiAmplitude / std::tan(theta);
        const double rad = eMinus - phi * phi;
        sum += wt[i] * std::sqrt(std::max(rad, 0.0)) * hw * std::cos(v) * 0.5 * kPi;
    }
    return sum;
}

} // namespace

SusyContext::SusyContext(int m_) : m(m_) {
    if (m < 1) throw DomainError("SusyContext: m must be >= 1");
    phiAmplitude = m + 0.5;
    groundEigen = static_cast<double>(m) * (m + 1);
}

double susy_potential(const SusyContext& ctx, double theta) {
    check_interior(theta, "susy_potential");
    return -ctx.phiAmplitude / std::tan(theta);
}

PartnerPotentials partner_potentials(const SusyContext& ctx, double theta) {
    check_interior(theta, "partner_potentials");
    const double phi = susy_potential(ctx, theta);
    const double s = std::sin(theta);
    const double dphi = ctx.phiAmplitude / (s * s);
    return {phi * phi - dphi, phi * phi + dphi};
}

CbcTurning cbc_turning_points(const SusyContext& ctx, double eMinus) {
    if (eMinus < 0.0) throw DomainError("cbc_turning_points: E_minus must be >= 0");
    if (eMinus == 0.0) return {kPi / 2, kPi / 2, true};
    const double a = std::atan(ctx.phiAmplitude / std::sqrt(eMinus));
    return {a, kPi - a, false};
}

double cbc_integral(const SusyContext& ctx, double eMinus) {
    if (!(eMinus > 0.0)) throw DomainError("cbc_integral: E_minus must be positive");
    const CbcTurning tp = cbc_turning_points(ctx, eMinus);
    double prev = cbc_quadrature(ctx, eMinus, tp.a, tp.b, 48);
    for (int nodes = 96; nodes <= 6144; nodes *= 2) {
        const double cur = cbc_quadrature(ctx, eMinus, tp.a, tp.b, nodes);
        if (std::abs(cur - prev) <= 1e-9) return cur;
        prev = cur;
    }
    throw QuadratureNonConvergence("cbc_integral: node doubling did not stabilize");
}

CbcLevel swkb_spectrum(const SusyContext& ctx, int nTheta) {
    if (nTheta < 0) throw DomainError("swkb_spectrum: nTheta must be >= 0");
    CbcLevel level;
    level.nTheta = nTheta;
    // E_minus = (nTheta + m + 1/2)^2 - (m + 1/2)^2 = nTheta (nTheta + 2m + 1)
    const long long em = static_cast<long long>(nTheta) * (nTheta + 2LL * ctx.m + 1LL);
    const long long l = nTheta + ctx.m;
    level.eMinus = static_cast<double>(em);
    level.lambda2 = static_cast<double>(l * (l + 1));
    const CbcTurning tp = cbc_turning_points(ctx, level.eMinus);
    level.turningA = tp.a;
    level.turningB = tp.b;
    return level;
}

double zero_mode_residual(const SusyContext& ctx, double theta) {
    check_interior(theta, "zero_mode_residual");
    const double p = ctx.m + 0.5;
    auto f0 = [p](double t) { return std::pow(std::sin(t), p); };
    auto second = [&](double h) {
        return (-f0(theta + 2 * h) + 16.0 * f0(theta + h) - 30.0 * f0(theta) +
                16.0 * f0(theta - h) - f0(theta - 2 * h)) /
               (12.0 * h * h);
    };
    const double h = 0.02;
    const double d = (16.0 * second(h / 2) - second(h)) / 15.0;
    return -d + partner_potentials(ctx, theta).vMinus * f0(theta);
}

} // namespace angwkb
