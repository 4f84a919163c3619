#include "angwkb/contour_integrator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "angwkb/errors.hpp"
#include "angwkb/series_quantizer.hpp"

namespace angwkb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxSamples = 1 << 20;
constexpr double kAcceptGate = 1e-9;

struct NumTerm {
    double coeff;
    int cosPow;
    int sinPow;
    int wPow;
};

std::complex<double> cpow_int(std::complex<double> base, int exp) {
    if (exp < 0) return 1.0 / cpow_int(base, -exp);
    std::complex<double> r = 1.0, b = base;
    for (unsigned e = static_cast<unsigned>(exp); e != 0; e >>= 1u) {
        if (e & 1u) r *= b;
        b *= b;
    }
    return r;
}

// Coefficients frozen to doubles once per (expr, U); split by sine parity
// because even- and odd-parity pieces realign differently.
struct CompiledExpr {
    std::vector<NumTerm> even;
    std::vector<NumTerm> odd;
};

CompiledExpr compile(const PhaseExpr& expr, double U) {
    CompiledExpr c;
    for (const auto& t : expr.terms()) {
        NumTerm nt{t.coeff.eval(U), t.cosPow, t.sinPow, t.wPow};
        (t.sinPow % 2 == 0 ? c.even : c.odd).push_back(nt);
    }
    return c;
}

struct SweepResult {
    std::complex<double> even;
    std::complex<double> odd;
};

// Trapezoidal sweep over the closed ellipse, parametrized so the cycle
// runs in the positive-action direction, starting at the top where w is
// anchored positive just above the cut.
std::optional<SweepResult> sweep(const CompiledExpr& ce, double E, double U,
                                 const ContourPath& path, int samples) {
    SweepResult acc{};
    BranchTracker tracker;
    const double dt = 2.0 * kPi / samples;
    for (int j = 0; j < samples; ++j) {
        const double t = kPi / 2 - j * dt;
        const std::complex<double> z(path.a * std::cos(t), path.b * std::sin(t));
        const std::complex<double> dz =
            std::complex<double>(-path.a * std::sin(t), path.b * std::cos(t)) * (-dt);
        const std::complex<double> cz = std::cos(z);
        const std::complex<double> w2 = E - U / (cz * cz);
        std::complex<double> w;
        if (j == 0) {
            w = tracker.start(w2);
        } else {
            auto tracked = tracker.step(w2);
            if (!tracked) return std::nullopt;
            w = *tracked;
        }
        const std::complex<double> sz = std::sin(z);
        std::complex<double> fe = 0.0, fo = 0.0;
        for (const auto& nt : ce.even)
            fe += nt.coeff * cpow_int(cz, nt.cosPow) * cpow_int(sz, nt.sinPow) *
                  cpow_int(w, nt.wPow);
        for (const auto& nt : ce.odd)
            fo += nt.coeff * cpow_int(cz, nt.cosPow) * cpow_int(sz, nt.sinPow) *
                  cpow_int(w, nt.wPow);
        acc.even += fe * dz;
        acc.odd += fo * dz;
    }
    return acc;
}

} // namespace

TurningPoints turning_points(double E, double U) {
    if (!(U > 0.0)) throw DomainError("turning_points: U must be positive");
    if (!(E > U)) throw DomainError("turning_points: E must exceed U");
    TurningPoints tp;
    tp.kappa = std::sqrt(U / E);
    tp.xPlus = std::acos(tp.kappa);
    tp.xMinus = -tp.xPlus;
    return tp;
}

ContourPath ContourPath::enclosing(const TurningPoints& tp, int samples, double b) {
    ContourPath p;
    p.a = 0.5 * (tp.xPlus + kPi / 2);
    p.b = b;
    p.samples = samples;
    p.validate(tp);
    return p;
}

void ContourPath::validate(const TurningPoints& tp) const {
    if (!(a > tp.xPlus))
        throw DomainError("ContourPath: real semi-axis must enclose the turning points");
    if (!(a < kPi / 2))
        throw DomainError("ContourPath: real semi-axis must stay inside |x| < pi/2");
    if (!(b > 0.0)) throw DomainError("ContourPath: imaginary semi-axis must be positive");
    if (samples < 256 || samples % 2 != 0)
        throw DomainError("ContourPath: samples must be even and >= 256");
}

std::complex<double> BranchTracker::start(std::complex<double> w2) {
    prev_ = std::sqrt(w2);
    return prev_;
}

std::optional<std::complex<double>> BranchTracker::step(std::complex<double> w2) {
    std::complex<double> w = std::sqrt(w2);
    // pick the sign closer to the previous sample
    const double along = w.real() * prev_.real() + w.imag() * prev_.imag();
    if (along < 0.0) w = -w;
    const double num = std::abs(w.real() * prev_.imag() - w.imag() * prev_.real());
    const double den = std::abs(w.real() * prev_.real() + w.imag() * prev_.imag());
    if (!(num < den)) return std::nullopt; // |tan(rotation)| >= 1: too coarse
    prev_ = w;
    return w;
}

CycleIntegral contour_integral_full(const PhaseExpr& expr, double E, double U,
                                    const ContourPath& path) {
    const TurningPoints tp = turning_points(E, U);
    path.validate(tp);

    if (expr.is_zero()) return {0.0, 0.0, path.samples};

    const CompiledExpr ce = compile(expr, U);

    std::optional<SweepResult> prev;
    int prevSamples = 0;
    for (int samples = path.samples; samples <= kMaxSamples; samples *= 2) {
        auto cur = sweep(ce, E, U, path, samples);
        if (!cur) {
            prev.reset(); // resampled: compare only consecutive valid resolutions
            continue;
        }
        if (prev) {
            const double diff = std::abs(cur->even - prev->even) + std::abs(cur->odd - prev->odd);
            const double mag = std::abs(cur->even) + std::abs(cur->odd);
            if (diff <= kAcceptGate * (1.0 + mag)) {
                // Even-parity pieces are real directly; odd-parity pieces are
                // imaginary and realign by the quantization branch in which
                // the first odd order contributes -pi.
                CycleIntegral out;
                out.value = cur->even.real() - cur->odd.imag();
                out.imagResidual = std::abs(cur->even.imag()) + std::abs(cur->odd.real());
                out.samplesUsed = samples;
                if (out.imagResidual > 1e-6 * (1.0 + std::abs(out.value)))
                    throw NonRealResult("contour_integral: spurious component " +
                                        std::to_string(out.imagResidual));
                return out;
            }
        }
        prev = cur;
        prevSamples = samples;
    }
    if (!prev)
        throw BranchDiscontinuity(
            "contour_integral: branch certificate kept failing up to " +
            std::to_string(kMaxSamples) + " samples");
    throw QuadratureNonConvergence(
        "contour_integral: no doubling agreement up to " + std::to_string(prevSamples) +
        " samples");
}

double contour_integral(const PhaseExpr& expr, double E, double U, const ContourPath& path) {
    return contour_integral_full(expr, E, U, path).value;
}

IntegralReport integral_report(int n, double E, double U, std::span<const PhaseExpr> series,
                               std::optional<ContourPath> path) {
    if (n < 0 || n >= static_cast<int>(series.size()))
        throw DomainError("integral_report: order outside the computed series");

    const TurningPoints tp = turning_points(E, U);
    const ContourPath p = path ? *path : ContourPath::enclosing(tp);

    IntegralReport rep;
    rep.n = n;
    rep.E = E;
    rep.U = U;

    const CycleIntegral total = contour_integral_full(series[n], E, U, p);
    rep.numeric = total.value;
    rep.imagResidual = total.imagResidual;
    rep.samplesUsed = total.samplesUsed;

    if (n == 0) {
        rep.closedForm = 2.0 * kPi * (std::sqrt(E) - std::sqrt(U));
        rep.perTerm.push_back({0, total.value});
        rep.lZeroContribution = total.value;
        return rep;
    }
    if (n == 1) {
        rep.closedForm = -kPi;
    } else if (n % 2 == 1) {
        rep.closedForm = 0.0;
    } else if (4.0 * U > 1.0) {
        rep.closedForm = 2.0 * kPi * action_term(n / 2, U);
    }

    // Split along the canonical coefficients: the l-th piece is
    // C_{n,l}(E,U) * cos^(2l-3n) sin^f(n) w^(1-3n).
    const CanonicalPhase canon = extract_canonical(series[n], n);
    for (const auto& c : canon.coefficients) {
        const PhaseExpr mono =
            PhaseExpr::term(UPoly(1), 2 * c.l - 3 * n, canon.sinParity, canon.wPow);
        const double monoIntegral = contour_integral_full(mono, E, U, p).value;
        const double value = canon.eval_coefficient(c.l, E, U) * monoIntegral;
        rep.perTerm.push_back({c.l, value});
        if (c.l == 0) rep.lZeroContribution = value;
    }
    return rep;
}

} // namespace angwkb
