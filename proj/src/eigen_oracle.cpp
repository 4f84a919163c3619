#include "angwkb/eigen_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "angwkb/errors.hpp"

namespace angwkb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescaleThreshold = 1e250;

struct Shot {
    double mismatch = 0.0; // normalized Wronskian at the match point
    int nodeCount = 0;
    double sampleLeft = 0.0;  // assembled F at -sampleAbscissa
    double sampleRight = 0.0; // assembled F at +sampleAbscissa
};

struct Grid {
    double xa, xb, h;
    int n, iMatch;
};

Grid make_grid(const OracleConfig& cfg) {
    Grid g;
    g.xa = -kPi / 2 + cfg.edgeOffset;
    g.xb = kPi / 2 - cfg.edgeOffset;
    g.n = cfg.gridPoints;
    g.h = (g.xb - g.xa) / (g.n - 1);
    const int raw = static_cast<int>(std::lround((cfg.matchPoint - g.xa) / g.h));
    g.iMatch = std::clamp(raw, 2, g.n - 3);
    return g;
}

double frobenius(double t, int m, double E, double U) {
    // F ~ t^(m+1/2) (1 + c1 t^2) near the singular endpoint, t the distance
    // from +-pi/2; c1 from substituting into the reduced equation.
    const double c1 = (U / 3.0 - E) / (4.0 * (m + 1.0));
    return std::pow(t, m + 0.5) * (1.0 + c1 * t * t);
}

// Numerov sweep from one edge up to index `last` (inclusive) in marching
// order; values stored by global grid index.
void numerov_sweep(std::vector<double>& f, const Grid& g, double E, double U, int m,
                   bool fromLeft, int last) {
    const double h2 = g.h * g.h;
    auto q = [&](int i) {
        const double x = g.xa + g.h * i;
        const double c = std::cos(x);
        return U / (c * c) - E; // F'' = q F
    };
    const int i0 = fromLeft ? 0 : g.n - 1;
    const int step = fromLeft ? 1 : -1;
    const double t0 = fromLeft ? g.xa + kPi / 2 : kPi / 2 - g.xb; // distance from the pole
    f[i0] = frobenius(t0, m, E, U);
    f[i0 + step] = frobenius(t0 + g.h, m, E, U);
    int i = i0 + step;
    while (i != last) {
        const double fim = 1.0 - h2 * q(i - step) / 12.0;
        const double fi = 1.0 + 5.0 * h2 * q(i) / 12.0;
        const double fip = 1.0 - h2 * q(i + step) / 12.0;
        f[i + step] = (2.0 * f[i] * fi - f[i - step] * fim) / fip;
        if (!std::isfinite(f[i + step]))
            throw NumericalOverflow("eigen_oracle: non-finite value during sweep");
        if (std::abs(f[i + step]) > kRescaleThreshold) {
            // rescale the whole sweep so far; only ratios and signs matter
            for (int j = i0; j != i + 2 * step; j += step) f[j] /= kRescaleThreshold;
        }
        i += step;
    }
}

double five_point_derivative(const std::vector<double>& f, int i, double h) {
    return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}

Shot shoot(double E, int m, const OracleConfig& cfg, double sampleAbscissa = -1.0) {
    const double U = static_cast<double>(m) * m - 0.25;
    const Grid g = make_grid(cfg);

    std::vector<double> fl(g.n, 0.0), fr(g.n, 0.0);
    numerov_sweep(fl, g, E, U, m, true, g.iMatch + 2);
    numerov_sweep(fr, g, E, U, m, false, g.iMatch - 2);

    const double dl = five_point_derivative(fl, g.iMatch, g.h);
    const double dr = five_point_derivative(fr, g.iMatch, g.h);
    const double wronskian = dl * fr[g.iMatch] - dr * fl[g.iMatch];
    const double norm = std::abs(dl * fr[g.iMatch]) + std::abs(dr * fl[g.iMatch]) + 1e-300;

    // Assemble a single function to count nodes: join where both sweeps are
    // healthy, then scan for sign changes.
    int join = g.iMatch;
    double best = -1.0;
    for (int i = g.iMatch - 2; i <= g.iMatch + 2; ++i) {
        const double score = std::min(std::abs(fl[i]), std::abs(fr[i]));
        if (score > best) {
            best = score;
            join = i;
        }
    }
    const double s = (fr[join] != 0.0) ? fl[join] / fr[join] : 1.0;

    Shot shot;
    shot.mismatch = wronskian / norm;
    double prev = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double v = (i <= join) ? fl[i] : s * fr[i];
        if (v != 0.0) {
            if (prev != 0.0 && v * prev < 0.0) ++shot.nodeCount;
            prev = v;
        }
    }
    if (sampleAbscissa > 0.0) {
        const int iL = std::clamp(static_cast<int>(std::lround((-sampleAbscissa - g.xa) / g.h)),
                                  0, g.n - 1);
        const int iR = std::clamp(static_cast<int>(std::lround((sampleAbscissa - g.xa) / g.h)),
                                  0, g.n - 1);
        shot.sampleLeft = (iL <= join) ? fl[iL] : s * fr[iL];
        shot.sampleRight = (iR <= join) ? fl[iR] : s * fr[iR];
    }
    return shot;
}

} // namespace

void OracleConfig::validate() const {
    if (gridPoints < 2000)
        throw DomainError("OracleConfig: gridPoints must be >= 2000");
    if (!(edgeOffset > 0.0 && edgeOffset < 0.1))
        throw DomainError("OracleConfig: edgeOffset must lie in (0, 0.1)");
    if (!(tolerance > 0.0))
        throw DomainError("OracleConfig: tolerance must be positive");
    if (!(matchPoint > -kPi / 2 + edgeOffset && matchPoint < kPi / 2 - edgeOffset))
        throw DomainError("OracleConfig: matchPoint must be strictly inside the interval");
    if (!(bracketWidth > 0.0))
        throw DomainError("OracleConfig: bracketWidth must be positive");
}

double shoot_mismatch(double E, int m, const OracleConfig& cfg) {
    if (m < 1) throw DomainError("shoot_mismatch: m must be >= 1");
    if (!(E > 0.0)) throw DomainError("shoot_mismatch: E must be positive");
    cfg.validate();
    return shoot(E, m, cfg).mismatch;
}

OracleResult solve_level(int m, int l, const OracleConfig& cfg) {
    if (m < 1) throw DomainError("solve_level: m must be >= 1");
    if (l < m) throw DomainError("solve_level: l must be >= m");
    cfg.validate();

    const double e0 = (l + 0.5) * (l + 0.5);
    double lo = e0 - cfg.bracketWidth;
    double hi = e0 + cfg.bracketWidth;
    double flo = shoot(lo, m, cfg).mismatch;
    double fhi = shoot(hi, m, cfg).mismatch;
    for (int tries = 0; flo * fhi > 0.0; ++tries) {
        if (tries >= 12)
            throw BracketFailure("solve_level: no sign change around E = " + std::to_string(e0));
        const double width = hi - lo;
        lo -= width;
        hi += width;
        lo = std::max(lo, 1e-6);
        flo = shoot(lo, m, cfg).mismatch;
        fhi = shoot(hi, m, cfg).mismatch;
    }

    for (int it = 0; it < 200 && (hi - lo) > cfg.tolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = shoot(mid, m, cfg).mismatch;
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }

    // secant polish inside the converged bracket
    double e = 0.5 * (lo + hi);
    if (fhi != flo) {
        const double es = hi - fhi * (hi - lo) / (fhi - flo);
        if (es > lo && es < hi) e = es;
    }

    const Shot final = shoot(e, m, cfg);
    if (final.nodeCount != l - m)
        throw NodeCountMismatch("solve_level: (m=" + std::to_string(m) + ", l=" +
                                std::to_string(l) + ") converged with " +
                                std::to_string(final.nodeCount) + " nodes, expected " +
                                std::to_string(l - m));

    OracleResult r;
    r.m = m;
    r.l = l;
    r.E = e;
    r.lambda2 = e - 0.25;
    r.nodeCount = final.nodeCount;
    r.converged = (hi - lo) <= cfg.tolerance;
    return r;
}

std::pair<double, double> eigenfunction_pair(int m, int l, double x, const OracleConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("eigenfunction_pair: x must be positive");
    const OracleResult level = solve_level(m, l, cfg);
    const Shot s = shoot(level.E, m, cfg, x);
    return {s.sampleLeft, s.sampleRight};
}

} // namespace angwkb
