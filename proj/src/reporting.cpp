#include "angwkb/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "angwkb/contour_integrator.hpp"
#include "angwkb/errors.hpp"
#include "angwkb/phase_algebra.hpp"
#include "angwkb/series_quantizer.hpp"
#include "angwkb/swkb.hpp"

namespace angwkb {

namespace {

constexpr double kPi = std::numbers::pi;

void check_range(const Range& r, const char* name, int minLo) {
    if (r.empty())
        throw DomainError(std::string(name) + ": empty range");
    if (r.lo < minLo)
        throw DomainError(std::string(name) + ": lower bound must be >= " +
                          std::to_string(minLo));
}

std::vector<std::string> quantize_row(int m, int nTheta, const std::string& n,
                                      const QuantizationRecord& rec) {
    return {format_int(m),        format_int(nTheta),
            n,                    format_real(rec.energy),
            format_real(rec.lambda2), format_real(rec.lambda2Exact),
            format_real(rec.residual)};
}

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string format_int(long long v) { return std::to_string(v); }

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ',';
        os << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Table& t, const std::string& command) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

Table from_json(const std::string& text, std::string* command) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("from_json: ") + e.what());
    }
    if (!j.contains("columns") || !j.contains("rows"))
        throw DomainError("from_json: missing columns/rows");
    Table t;
    t.columns = j["columns"].get<std::vector<std::string>>();
    for (const auto& row : j["rows"])
        t.rows.push_back(row.get<std::vector<std::string>>());
    if (command && j.contains("command")) *command = j["command"].get<std::string>();
    return t;
}

Table quantize_table(Range mRange, Range nThetaRange, int order) {
    check_range(mRange, "quantize: m range", 1);
    check_range(nThetaRange, "quantize: n_theta range", 0);
    if (order < 0) throw DomainError("quantize: order must be >= 0");

    Table t;
    t.columns = {"m", "n_theta", "N", "E_N", "lambda2_N", "lambda2_exact", "residual"};
    for (int m = mRange.lo; m <= mRange.hi; ++m) {
        for (int nt = nThetaRange.lo; nt <= nThetaRange.hi; ++nt) {
            const ProblemParams p(m, nt);
            for (int N = 0; N <= order; ++N)
                t.rows.push_back(quantize_row(m, nt, format_int(N), partial_sum_energy(p, N)));
            t.rows.push_back(quantize_row(m, nt, "summed", summed_quantization(p)));
            const double torus = torus_limit(p);
            QuantizationRecord tor;
            tor.energy = torus + 0.25;
            tor.lambda2 = torus;
            tor.lambda2Exact = summed_quantization(p).lambda2Exact;
            tor.residual = std::abs(torus - tor.lambda2Exact);
            t.rows.push_back(quantize_row(m, nt, "torus", tor));
        }
    }
    return t;
}

Table contour_table(Range mRange, Range lRange, int order, int samples) {
    check_range(mRange, "contour: m range", 1);
    if (order < 0 || order > kMaxOrder)
        throw DomainError("contour: order must lie in 0.." + std::to_string(kMaxOrder));

    const auto series = wkb_series(order);
    Table t;
    t.columns = {"n", "m", "l", "E", "U", "numeric", "closed_form", "abs_error",
                 "samples_used"};
    for (int n = 0; n <= order; ++n) {
        for (int m = mRange.lo; m <= mRange.hi; ++m) {
            const int lLo = lRange.empty() ? m : std::max(m, lRange.lo);
            const int lHi = lRange.empty() ? m + 2 : lRange.hi;
            for (int l = lLo; l <= lHi; ++l) {
                const double U = static_cast<double>(m) * m - 0.25;
                const double E = (l + 0.5) * (l + 0.5);
                ContourPath path = ContourPath::enclosing(turning_points(E, U), samples);
                const IntegralReport rep = integral_report(n, E, U, series, path);
                const double closed = rep.closedForm.value_or(
                    std::numeric_limits<double>::quiet_NaN());
                const double absErr = std::abs(rep.numeric - closed);
                const double gate = (n % 2 == 1 && n > 1) ? 1e-8 : 1e-6;
                if (!(absErr < gate))
                    throw GateFailure("contour: gate failed at n=" + std::to_string(n) +
                                      " m=" + std::to_string(m) + " l=" + std::to_string(l) +
                                      " (|numeric - closed| = " + format_real(absErr) + ")");
                if (n >= 2) {
                    const double rest = std::abs(rep.numeric - rep.lZeroContribution);
                    if (!(rest < 1e-8))
                        throw GateFailure("contour: l > 0 contribution " + format_real(rest) +
                                          " at n=" + std::to_string(n) + " m=" +
                                          std::to_string(m) + " l=" + std::to_string(l));
                }
                t.rows.push_back({format_int(n), format_int(m), format_int(l), format_real(E),
                                  format_real(U), format_real(rep.numeric), format_real(closed),
                                  format_real(absErr), format_int(rep.samplesUsed)});
            }
        }
    }
    return t;
}

Table swkb_table(Range mRange, Range nThetaRange) {
    check_range(mRange, "swkb: m range", 1);
    check_range(nThetaRange, "swkb: n_theta range", 0);

    Table t;
    t.columns = {"m", "n_theta", "e_minus", "lambda2_swkb", "lambda2_exact", "cbc_numeric",
                 "cbc_target", "abs_error"};
    for (int m = mRange.lo; m <= mRange.hi; ++m) {
        const SusyContext ctx(m);
        for (int nt = nThetaRange.lo; nt <= nThetaRange.hi; ++nt) {
            const CbcLevel level = swkb_spectrum(ctx, nt);
            const int l = nt + m;
            const double exact = static_cast<double>(l) * (l + 1);
            const double target = nt * kPi;
            const double numeric = (nt >= 1) ? cbc_integral(ctx, level.eMinus) : 0.0;
            t.rows.push_back({format_int(m), format_int(nt), format_real(level.eMinus),
                              format_real(level.lambda2), format_real(exact),
                              format_real(numeric), format_real(target),
                              format_real(std::abs(numeric - target))});
        }
    }
    return t;
}

Table oracle_table(Range mRange, Range lRange, const OracleConfig& cfg) {
    check_range(mRange, "oracle: m range", 1);

    Table t;
    t.columns = {"m", "l", "E", "lambda2", "lambda2_exact", "abs_error", "node_count"};
    for (int m = mRange.lo; m <= mRange.hi; ++m) {
        const int lLo = lRange.empty() ? m : std::max(m, lRange.lo);
        const int lHi = lRange.empty() ? m + 3 : lRange.hi;
        for (int l = lLo; l <= lHi; ++l) {
            const OracleResult r = solve_level(m, l, cfg);
            const double exact = static_cast<double>(l) * (l + 1);
            t.rows.push_back({format_int(m), format_int(l), format_real(r.E),
                              format_real(r.lambda2), format_real(exact),
                              format_real(std::abs(r.lambda2 - exact)),
                              format_int(r.nodeCount)});
        }
    }
    return t;
}

Table report_table(Range mRange, Range lRange, int order, const OracleConfig& cfg) {
    check_range(mRange, "report: m range", 1);
    if (order < 0) throw DomainError("report: order must be >= 0");

    Table t;
    t.columns = {"m", "l", "lambda2_exact", "lambda2_torus", "lambda2_wkb_N",
                 "lambda2_wkb_summed", "lambda2_swkb", "lambda2_oracle", "max_abs_error"};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int m = mRange.lo; m <= mRange.hi; ++m) {
        const int lLo = lRange.empty() ? m : std::max(m, lRange.lo);
        const int lHi = lRange.empty() ? m + 3 : lRange.hi;
        for (int l = lLo; l <= lHi; ++l) {
            const double exact = static_cast<double>(l) * (l + 1);
            double torus = nan, wkbN = nan, summed = nan, swkb = nan, oracle = nan;
            try {
                const ProblemParams p(m, l - m);
                torus = torus_limit(p);
                wkbN = partial_sum_energy(p, order).lambda2;
                summed = summed_quantization(p).lambda2;
            } catch (const DomainError&) {
            }
            try {
                swkb = swkb_spectrum(SusyContext(m), l - m).lambda2;
            } catch (const DomainError&) {
            }
            try {
                oracle = solve_level(m, l, cfg).lambda2;
            } catch (const std::runtime_error&) {
            } catch (const DomainError&) {
            }
            double maxErr = 0.0;
            for (double v : {summed, swkb, oracle}) {
                if (std::isnan(v)) {
                    maxErr = nan;
                    break;
                }
                maxErr = std::max(maxErr, std::abs(v - exact));
            }
            t.rows.push_back({format_int(m), format_int(l), format_real(exact),
                              format_real(torus), format_real(wkbN), format_real(summed),
                              format_real(swkb), format_real(oracle), format_real(maxErr)});
        }
    }
    return t;
}

} // namespace angwkb
