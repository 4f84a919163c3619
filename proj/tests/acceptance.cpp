// Acceptance suite: every headline result of the engine, one line each.
// Exits nonzero when any check misses its tolerance.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "angwkb/contour_integrator.hpp"
#include "angwkb/eigen_oracle.hpp"
#include "angwkb/phase_algebra.hpp"
#include "angwkb/reporting.hpp"
#include "angwkb/series_quantizer.hpp"
#include "angwkb/swkb.hpp"

using namespace angwkb;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void criterion(int index, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%d/8] %-42s %s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL", note.c_str());
    if (!ok) ++failures;
}

bool summed_spectrum_exact() {
    for (int m = 1; m <= 6; ++m)
        for (int nt = 0; nt <= 6; ++nt) {
            const QuantizationRecord r = summed_quantization(ProblemParams(m, nt));
            if (!(r.residual <= 1e-12 * r.lambda2Exact)) return false;
        }
    return true;
}

bool partial_sums_converge() {
    for (int m = 1; m <= 4; ++m)
        for (int nt = 0; nt <= 3; ++nt) {
            const ProblemParams p(m, nt);
            if (!(partial_sum_energy(p, 30).residual < 1e-10)) return false;
            for (int N = 2; N < 30; ++N) {
                const double rN = partial_sum_energy(p, N).residual;
                // strict decrease until the tail reaches rounding noise
                if (rN > 1e-12 && !(partial_sum_energy(p, N + 1).residual < rN)) return false;
            }
        }
    return true;
}

bool canonical_form_certified() {
    const auto series = wkb_series(kMaxOrder);
    for (int n = 1; n <= kMaxOrder; ++n) {
        const CanonicalPhase c = extract_canonical(series[n], n); // throws on shape violation
        if (c.wPow != 1 - 3 * n || c.sinParity != n % 2) return false;
        for (const auto& coeff : c.coefficients)
            if (coeff.l < 0 || coeff.l > max_cos_index(n)) return false;
        if (n % 2 == 0) {
            if (!(c.c0() == closed_form_c0(n))) return false;
        } else if (n > 1) {
            if (!c.c0().is_zero()) return false;
        }
    }
    return true;
}

bool contour_confirmation() {
    const auto series = wkb_series(8);
    for (int m = 1; m <= 3; ++m) {
        const double U = static_cast<double>(m) * m - 0.25;
        for (int l = m; l <= m + 2; ++l) {
            const double E = (l + 0.5) * (l + 0.5);
            const ContourPath path = ContourPath::enclosing(turning_points(E, U));

            const double action = contour_integral(series[0], E, U, path);
            if (!(std::abs(action - 2 * kPi * (std::sqrt(E) - std::sqrt(U))) < 1e-6))
                return false;
            const double halfPhase = contour_integral(series[1], E, U, path);
            if (!(std::abs(halfPhase + kPi) < 1e-6)) return false;

            for (int n : {3, 5, 7})
                if (!(std::abs(contour_integral(series[n], E, U, path)) < 1e-8)) return false;

            for (int k = 1; k <= 4; ++k) {
                const IntegralReport rep = integral_report(2 * k, E, U, series, path);
                if (!(std::abs(rep.numeric - 2 * kPi * action_term(k, U)) < 1e-6))
                    return false;
                if (!(std::abs(rep.numeric - rep.lZeroContribution) < 1e-8)) return false;
            }
        }
    }
    return true;
}

bool torus_gap_exact() {
    for (int m = 1; m <= 6; ++m)
        for (int nt = 0; nt <= 6; ++nt) {
            const ProblemParams p(m, nt);
            if (torus_limit(p) - summed_quantization(p).lambda2 != 0.25) return false;
        }
    return true;
}

bool swkb_exactness() {
    for (int m = 1; m <= 6; ++m) {
        const SusyContext ctx(m);
        for (int nt = 0; nt <= 6; ++nt) {
            const long long l = nt + m;
            if (swkb_spectrum(ctx, nt).lambda2 != static_cast<double>(l * (l + 1)))
                return false;
        }
        for (int nt = 1; nt <= 4; ++nt) {
            const CbcLevel level = swkb_spectrum(ctx, nt);
            if (!(std::abs(cbc_integral(ctx, level.eMinus) - nt * kPi) < 1e-8)) return false;
        }
        for (double theta : {0.5, 1.0, 2.0})
            if (!(std::abs(zero_mode_residual(ctx, theta)) < 1e-8)) return false;
    }
    return true;
}

bool oracle_anchoring() {
    for (int m = 1; m <= 4; ++m)
        for (int l = m; l <= m + 3; ++l) {
            const OracleResult r = solve_level(m, l);
            if (!(std::abs(r.lambda2 - static_cast<double>(l) * (l + 1)) < 1e-6)) return false;
            if (r.nodeCount != l - m) return false;
        }
    return true;
}

bool cross_method_report() {
    const Table t = report_table({1, 4}, {}, 12);
    size_t summedCol = 0, swkbCol = 0, oracleCol = 0;
    for (size_t c = 0; c < t.columns.size(); ++c) {
        if (t.columns[c] == "lambda2_wkb_summed") summedCol = c;
        if (t.columns[c] == "lambda2_swkb") swkbCol = c;
        if (t.columns[c] == "lambda2_oracle") oracleCol = c;
    }
    for (const auto& row : t.rows) {
        const double a = std::stod(row[summedCol]);
        const double b = std::stod(row[swkbCol]);
        const double c = std::stod(row[oracleCol]);
        const double spread = std::max({a, b, c}) - std::min({a, b, c});
        if (std::isnan(spread) || !(spread < 1e-6)) return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "exact summed spectrum", summed_spectrum_exact);
    criterion(2, "series convergence", partial_sums_converge);
    criterion(3, "canonical-form certification to order 12", canonical_form_certified);
    criterion(4, "contour confirmation of every cycle", contour_confirmation);
    criterion(5, "torus limit overshoots by exactly 1/4", torus_gap_exact);
    criterion(6, "SWKB exactness and CBC consistency", swkb_exactness);
    criterion(7, "oracle anchoring of the spectrum", oracle_anchoring);
    criterion(8, "cross-method agreement", cross_method_report);
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
