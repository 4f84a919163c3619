#include "angwkb/phase_algebra.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "angwkb/errors.hpp"

namespace angwkb {

namespace {

using TermMap = std::map<TermKey, UPoly>;

void accumulate(TermMap& acc, const TermKey& key, const UPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(key, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// Splits s^b with b >= 2 via s^2 = 1 - c^2 until every sine power is 0 or 1.
void accumulate_reduced(TermMap& acc, TermKey key, UPoly p) {
    while (key.sinPow >= 2) {
        accumulate_reduced(acc, {key.cosPow + 2, key.sinPow - 2, key.wPow}, -p);
        key.sinPow -= 2;
    }
    accumulate(acc, key, p);
}

PhaseExpr to_expr(TermMap&& acc) {
    std::vector<PhaseTerm> terms;
    terms.reserve(acc.size());
    for (auto& [key, poly] : acc)
        terms.push_back({std::move(poly), key.cosPow, key.sinPow, key.wPow});
    return PhaseExpr::from_terms(std::move(terms));
}

double ipow(double base, int exp) {
    if (exp < 0) return 1.0 / ipow(base, -exp);
    double r = 1.0, b = base;
    for (unsigned e = static_cast<unsigned>(exp); e != 0; e >>= 1u) {
        if (e & 1u) r *= b;
        b *= b;
    }
    return r;
}

std::complex<double> ipow(std::complex<double> base, int exp) {
    if (exp < 0) return 1.0 / ipow(base, -exp);
    std::complex<double> r = 1.0, b = base;
    for (unsigned e = static_cast<unsigned>(exp); e != 0; e >>= 1u) {
        if (e & 1u) r *= b;
        b *= b;
    }
    return r;
}

ExactScalar integer_binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return ExactScalar(mpq_class(r));
}

} // namespace

PhaseExpr PhaseExpr::from_terms(std::vector<PhaseTerm> terms) {
    PhaseExpr e;
    e.terms_ = std::move(terms);
    return e;
}

PhaseExpr PhaseExpr::term(UPoly coeff, int cosPow, int sinPow, int wPow) {
    if (coeff.is_zero()) return {};
    return from_terms({{std::move(coeff), cosPow, sinPow, wPow}});
}

PhaseExpr PhaseExpr::atom_w() { return term(UPoly(1), 0, 0, 1); }

std::string PhaseExpr::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << "  +  ";
        os << "[" << t.coeff.str() << "] c^" << t.cosPow << " s^" << t.sinPow << " w^" << t.wPow;
        first = false;
    }
    return os.str();
}

PhaseExpr normalize(const PhaseExpr& expr) {
    TermMap acc;
    for (const auto& t : expr.terms())
        accumulate_reduced(acc, t.key(), t.coeff);
    return to_expr(std::move(acc));
}

PhaseExpr differentiate(const PhaseExpr& expr) {
    TermMap acc;
    for (const auto& t : expr.terms()) {
        if (t.cosPow != 0)
            accumulate_reduced(acc, {t.cosPow - 1, t.sinPow + 1, t.wPow},
                               t.coeff.scaled(ExactScalar(-t.cosPow)));
        if (t.sinPow != 0)
            accumulate_reduced(acc, {t.cosPow + 1, t.sinPow - 1, t.wPow},
                               t.coeff.scaled(ExactScalar(t.sinPow)));
        if (t.wPow != 0)
            accumulate_reduced(acc, {t.cosPow - 3, t.sinPow + 1, t.wPow - 2},
                               t.coeff.shifted_up(1).scaled(ExactScalar(-t.wPow)));
    }
    return to_expr(std::move(acc));
}

PhaseExpr multiply(const PhaseExpr& a, const PhaseExpr& b) {
    TermMap acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            accumulate_reduced(acc,
                               {ta.cosPow + tb.cosPow, ta.sinPow + tb.sinPow, ta.wPow + tb.wPow},
                               ta.coeff * tb.coeff);
    return to_expr(std::move(acc));
}

PhaseExpr add(const PhaseExpr& a, const PhaseExpr& b) {
    TermMap acc;
    for (const auto& t : a.terms()) accumulate_reduced(acc, t.key(), t.coeff);
    for (const auto& t : b.terms()) accumulate_reduced(acc, t.key(), t.coeff);
    return to_expr(std::move(acc));
}

PhaseExpr scale(const PhaseExpr& a, const ExactScalar& s) {
    if (s.is_zero()) return {};
    std::vector<PhaseTerm> terms = a.terms();
    for (auto& t : terms) t.coeff = t.coeff.scaled(s);
    return PhaseExpr::from_terms(std::move(terms));
}

PhaseExpr wkb_recursion_step(std::span<const PhaseExpr> history) {
    if (history.empty())
        throw DomainError("wkb_recursion_step: empty history");
    if (!(history[0] == PhaseExpr::atom_w()))
        throw DomainError("wkb_recursion_step: history[0] must be the atom w");
    const int n = static_cast<int>(history.size());
    const bool even = (n % 2 == 0);

    // 2 w sigma_n' = ed * sigma_{n-1}'' + sum_k ep(k) sigma_k' sigma_{n-k}'
    // with ed = +1 (-1) for n even (odd) and ep = +1 only when n is even
    // and k is odd; the signs carry the i's of the imaginary odd phases.
    PhaseExpr acc = scale(differentiate(history[n - 1]), ExactScalar(even ? 1 : -1));
    for (int k = 1; k <= n - 1; ++k) {
        const int ep = (even && k % 2 == 1) ? 1 : -1;
        acc = add(acc, scale(multiply(history[k], history[n - k]), ExactScalar(ep)));
    }

    std::vector<PhaseTerm> terms = acc.terms();
    for (auto& t : terms) {
        t.coeff = t.coeff.scaled(ExactScalar(1, 2));
        t.wPow -= 1;
    }
    return PhaseExpr::from_terms(std::move(terms));
}

std::vector<PhaseExpr> wkb_series(int maxOrder) {
    if (maxOrder < 0) throw DomainError("wkb_series: negative order");
    std::vector<PhaseExpr> h;
    h.reserve(static_cast<size_t>(maxOrder) + 1);
    h.push_back(PhaseExpr::atom_w());
    for (int n = 1; n <= maxOrder; ++n)
        h.push_back(wkb_recursion_step(h));
    return h;
}

const CanonicalPhase::Coefficient* CanonicalPhase::find(int l) const {
    for (const auto& c : coefficients)
        if (c.l == l) return &c;
    return nullptr;
}

UPoly CanonicalPhase::c0() const {
    const Coefficient* c = find(0);
    if (c == nullptr) return {};
    if (c->byEPow.size() > 1)
        throw StructureViolation("CanonicalPhase: C_{n,0} is not E-free at n = " +
                                 std::to_string(n));
    return c->byEPow.empty() ? UPoly{} : c->byEPow.front();
}

double CanonicalPhase::eval_coefficient(int l, double E, double U) const {
    const Coefficient* c = find(l);
    if (c == nullptr) return 0.0;
    double r = 0.0;
    for (auto it = c->byEPow.rbegin(); it != c->byEPow.rend(); ++it) r = r * E + it->eval(U);
    return r;
}

double CanonicalPhase::eval(double x, double E, double U) const {
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double w = std::sqrt(E - U / (cx * cx));
    double r = 0.0;
    for (const auto& c : coefficients)
        r += eval_coefficient(c.l, E, U) * ipow(cx, 2 * c.l - 3 * n);
    return r * ipow(sx, sinParity) * ipow(w, wPow);
}

CanonicalPhase extract_canonical(const PhaseExpr& expr, int n) {
    if (n < 1) throw DomainError("extract_canonical: order must be >= 1");
    const int base = canonical_w_pow(n);
    const int parity = sin_parity(n);
    const int g = max_cos_index(n);

    std::map<int, std::map<int, UPoly>> byL; // l -> (E power -> UPoly)
    for (const auto& t : expr.terms()) {
        if (t.sinPow != parity)
            throw StructureViolation("extract_canonical: sin parity violated at n = " +
                                     std::to_string(n) + " by term " +
                                     PhaseExpr::from_terms({t}).str());
        if (t.wPow < base || (t.wPow - base) % 2 != 0)
            throw StructureViolation("extract_canonical: w power violated at n = " +
                                     std::to_string(n) + " by term " +
                                     PhaseExpr::from_terms({t}).str());
        if ((t.cosPow + 3 * n) % 2 != 0)
            throw StructureViolation("extract_canonical: cos power parity violated at n = " +
                                     std::to_string(n) + " by term " +
                                     PhaseExpr::from_terms({t}).str());

        // Pull the term down to w^base: w^(base+2j) = w^base (E - U c^-2)^j.
        const int j = (t.wPow - base) / 2;
        for (int i = 0; i <= j; ++i) {
            ExactScalar factor = integer_binomial(j, i);
            if (i % 2 != 0) factor = -factor;
            const UPoly contribution = t.coeff.shifted_up(i).scaled(factor);
            const int cosPow = t.cosPow - 2 * i;
            const int l = (cosPow + 3 * n) / 2;
            if (l < 0 || l > g)
                throw StructureViolation("extract_canonical: cos index " + std::to_string(l) +
                                         " outside 0.." + std::to_string(g) + " at n = " +
                                         std::to_string(n));
            auto& slot = byL[l][j - i];
            slot += contribution;
        }
    }

    CanonicalPhase out;
    out.n = n;
    out.wPow = base;
    out.sinParity = parity;
    for (auto& [l, eMap] : byL) {
        CanonicalPhase::Coefficient c;
        c.l = l;
        int maxE = -1;
        for (const auto& [d, p] : eMap)
            if (!p.is_zero()) maxE = std::max(maxE, d);
        if (maxE < 0) continue;
        c.byEPow.assign(static_cast<size_t>(maxE) + 1, UPoly{});
        for (auto& [d, p] : eMap)
            if (d <= maxE) c.byEPow[static_cast<size_t>(d)] = std::move(p);
        out.coefficients.push_back(std::move(c));
    }
    return out;
}

ExactScalar binomial_half(int k) {
    if (k < 0) throw DomainError("binomial_half: negative k");
    ExactScalar b(1);
    for (int i = 1; i <= k; ++i)
        b *= ExactScalar(3 - 2 * i, 2 * i);
    return b;
}

UPoly closed_form_c0(int n) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("closed_form_c0: order must be even and >= 2");
    const int k = n / 2;
    ExactScalar coeff = binomial_half(k) / pow(ExactScalar(2), 2 * k);
    if (k % 2 != 0) coeff = -coeff;
    return UPoly::monomial(2 * k, coeff);
}

double eval(const PhaseExpr& expr, double x, double E, double U) {
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double w2 = E - U / (cx * cx);
    if (w2 <= 0.0)
        throw DomainError("eval: x outside the classically allowed region");
    const double w = std::sqrt(w2);
    double r = 0.0;
    for (const auto& t : expr.terms())
        r += t.coeff.eval(U) * ipow(cx, t.cosPow) * ipow(sx, t.sinPow) * ipow(w, t.wPow);
    return r;
}

std::complex<double> eval(const PhaseExpr& expr, std::complex<double> z,
                          std::complex<double> w, double U) {
    const std::complex<double> cz = std::cos(z);
    const std::complex<double> sz = std::sin(z);
    std::complex<double> r = 0.0;
    for (const auto& t : expr.terms())
        r += t.coeff.eval(U) * ipow(cz, t.cosPow) * ipow(sz, t.sinPow) * ipow(w, t.wPow);
    return r;
}

std::string coefficient_dump(std::span<const CanonicalPhase> tables) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& table : tables) {
        nlohmann::ordered_json entry;
        entry["n"] = table.n;
        entry["wPow"] = table.wPow;
        entry["sinParity"] = table.sinParity;
        auto cs = nlohmann::ordered_json::array();
        for (const auto& c : table.coefficients) {
            nlohmann::ordered_json jc;
            jc["l"] = c.l;
            auto poly = nlohmann::ordered_json::array();
            for (const auto& up : c.byEPow) {
                auto row = nlohmann::ordered_json::array();
                for (int k = 0; k <= up.degree(); ++k) row.push_back(up.coeff(k).str());
                poly.push_back(std::move(row));
            }
            jc["poly"] = std::move(poly);
            cs.push_back(std::move(jc));
        }
        entry["C"] = std::move(cs);
        out.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

} // namespace angwkb
