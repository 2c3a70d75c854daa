#include "combx/formulas.hpp"

#include <nlohmann/json.hpp>

namespace combx {

namespace {

BigCount ipow(int base, int exp) {
    return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

bool all_points(int s, int t) { return s >= 1 && t >= 1; }
bool t_at_least_2(int s, int t) { return s >= 1 && t >= 2; }
bool t_exactly_2(int s, int t) { return s >= 1 && t == 2; }
bool nowhere(int, int) { return false; }

}  // namespace

std::string status_name(FormulaStatus s) {
    switch (s) {
        case FormulaStatus::Proven: return "proven";
        case FormulaStatus::Conjectured: return "conjectured";
        case FormulaStatus::ObservedOnly: return "observed_only";
    }
    return "unknown";
}

BigCount catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan index must be >= 0");
    return binomial(2LL * k, k) / (k + 1);
}

BigCount fuss_catalan(int s, int t) {
    if (s < 0 || t < 1) throw std::invalid_argument("fuss_catalan needs s >= 0, t >= 1");
    return binomial(static_cast<long long>(s) * (t + 1), s) / (static_cast<long long>(t) * s + 1);
}

BigCount recurrence_231_312_alpha(int s, int n) {
    if (s < 1 || n < 0) throw std::invalid_argument("recurrence needs s >= 1, n >= 0");
    std::vector<BigCount> f(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        if (m <= s)
            f[static_cast<size_t>(m)] = 1;
        else if (m < 2 * s)
            f[static_cast<size_t>(m)] = ipow(2, m - s);
        else
            f[static_cast<size_t>(m)] =
                2 * f[static_cast<size_t>(m - 1)] - f[static_cast<size_t>(m - s - 1)];
    }
    return f[static_cast<size_t>(n)];
}

PowerSeries gf_231_alpha_t2(int terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    if (terms == 1) return PowerSeries::constant(1, 1);
    const PowerSeries c = catalan_series(terms);
    const PowerSeries mono = PowerSeries::x(terms);
    const PowerSeries inner = mono * c;           // x*C(x); zero constant term
    const PowerSeries denom =
        PowerSeries::constant(1, terms) - mono * c * c.compose(inner);
    return denom.reciprocal();
}

BigCount evaluate(const FormulaEntry& entry, int s, int t) {
    if (!entry.evaluator)
        throw DomainError("entry '" + entry.id + "' has no closed form (observed values only)");
    if (!entry.in_domain || !entry.in_domain(s, t))
        throw DomainError("entry '" + entry.id + "' does not cover s=" + std::to_string(s) +
                          ", t=" + std::to_string(t) + " (domain: " + entry.domain_text + ")");
    return entry.evaluator(s, t);
}

FormulaRegistry::FormulaRegistry() {
    auto add = [this](std::string id, Family family, std::string patterns,
                      std::string domain_text, std::string formula_text, FormulaStatus status,
                      std::function<bool(int, int)> in_domain,
                      std::function<BigCount(int, int)> evaluator) {
        entries_.push_back(FormulaEntry{std::move(id), family, PatternSet::parse(patterns),
                                        std::move(domain_text), std::move(formula_text), status,
                                        std::move(in_domain), std::move(evaluator)});
    };
    const auto proven = FormulaStatus::Proven;
    const auto observed = FormulaStatus::ObservedOnly;

    // single patterns, alpha combs
    add("alpha.123", Family::Alpha, "123", "s >= 2, t >= 2", "0", proven,
        [](int s, int t) { return s >= 2 && t >= 2; },
        [](int, int) { return BigCount(0); });
    add("alpha.132", Family::Alpha, "132", "all s,t >= 1", "1", proven,
        all_points, [](int, int) { return BigCount(1); });
    add("alpha.213", Family::Alpha, "213", "t >= 2", "catalan(s)", proven,
        t_at_least_2, [](int s, int) { return catalan(s); });
    add("alpha.231", Family::Alpha, "231", "none", "no closed form known", observed,
        nowhere, nullptr);
    add("alpha.312.t2", Family::Alpha, "312", "t = 2", "catalan(s+1) - catalan(s)", proven,
        t_exactly_2, [](int s, int) { return catalan(s + 1) - catalan(s); });
    add("alpha.312.t_gt2", Family::Alpha, "312", "none", "no closed form known for t > 2",
        observed, nowhere, nullptr);
    add("alpha.321", Family::Alpha, "321", "none", "no closed form known", observed,
        nowhere, nullptr);

    // single patterns, beta combs
    add("beta.123", Family::Beta, "123", "s >= 2, t >= 2", "0", proven,
        [](int s, int t) { return s >= 2 && t >= 2; },
        [](int, int) { return BigCount(0); });
    add("beta.132", Family::Beta, "132", "all s,t >= 1", "1", proven,
        all_points, [](int, int) { return BigCount(1); });
    add("beta.213", Family::Beta, "213", "all s,t >= 1", "t^(s-1)", proven,
        all_points, [](int s, int t) { return ipow(t, s - 1); });
    add("beta.231", Family::Beta, "231", "all s,t >= 1", "t^(s-1)", proven,
        all_points, [](int s, int t) { return ipow(t, s - 1); });
    add("beta.312", Family::Beta, "312", "t >= 2", "fuss_catalan(s,t)", proven,
        t_at_least_2, [](int s, int t) { return fuss_catalan(s, t); });
    add("beta.321.t2", Family::Beta, "321", "t = 2", "fuss_catalan(s,2)", proven,
        t_exactly_2, [](int s, int) { return fuss_catalan(s, 2); });
    add("beta.321.t_gt2", Family::Beta, "321", "none", "no closed form known for t > 2",
        observed, nowhere, nullptr);

    // pattern pairs, alpha combs
    add("alpha.213_231", Family::Alpha, "213,231", "t >= 2", "2^(s-1)", proven,
        t_at_least_2, [](int s, int) { return ipow(2, s - 1); });
    add("alpha.213_312", Family::Alpha, "213,312", "t >= 2", "2^(s-1)", proven,
        t_at_least_2, [](int s, int) { return ipow(2, s - 1); });
    add("alpha.213_321", Family::Alpha, "213,321", "t >= 2", "binomial(s,2) + 1", proven,
        t_at_least_2, [](int s, int) { return binomial(s, 2) + 1; });
    add("alpha.231_312", Family::Alpha, "231,312", "all s,t >= 1",
        "f(s,s*t) with f(s,n) = 1 for n <= s; 2^(n-s) for s < n < 2s; "
        "2 f(s,n-1) - f(s,n-s-1) otherwise",
        proven, all_points,
        [](int s, int t) { return recurrence_231_312_alpha(s, s * t); });
    add("alpha.231_321.t2", Family::Alpha, "231,321", "t = 2", "(s-1)*2^(s-1) + 1",
        FormulaStatus::Conjectured, t_exactly_2,
        [](int s, int) { return BigCount(s - 1) * ipow(2, s - 1) + 1; });
    add("alpha.312_321", Family::Alpha, "312,321", "all s,t >= 1",
        "f(s,s*t), the same recurrence as the 231,312 family", proven, all_points,
        [](int s, int t) { return recurrence_231_312_alpha(s, s * t); });

    // pattern pairs, beta combs
    add("beta.213_231", Family::Beta, "213,231", "all s,t >= 1", "1", proven,
        all_points, [](int, int) { return BigCount(1); });
    add("beta.213_312", Family::Beta, "213,312", "t >= 2", "2^(s-1)", proven,
        t_at_least_2, [](int s, int) { return ipow(2, s - 1); });
    add("beta.213_321", Family::Beta, "213,321", "all s,t >= 1", "(s-1)*(t-1) + 1", proven,
        all_points, [](int s, int t) { return BigCount(s - 1) * (t - 1) + 1; });
    add("beta.231_312", Family::Beta, "231,312", "t >= 2", "2^(s-1)", proven,
        t_at_least_2, [](int s, int) { return ipow(2, s - 1); });
    add("beta.231_321", Family::Beta, "231,321", "all s,t >= 1", "t^(s-1)", proven,
        all_points, [](int s, int t) { return ipow(t, s - 1); });
    add("beta.312_321", Family::Beta, "312,321", "t >= 2", "(t+1)^(s-1)", proven,
        t_at_least_2, [](int s, int t) { return ipow(t + 1, s - 1); });
}

const FormulaRegistry& FormulaRegistry::instance() {
    static const FormulaRegistry registry;
    return registry;
}

const FormulaEntry* FormulaRegistry::find(std::string_view id) const {
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<const FormulaEntry*> FormulaRegistry::lookup(Family family,
                                                         const PatternSet& ps) const {
    std::vector<const FormulaEntry*> out;
    for (const auto& e : entries_)
        if (e.family == family && e.patterns == ps) out.push_back(&e);
    return out;
}

std::string FormulaRegistry::to_json(bool pretty) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries_) {
        rows.push_back({{"id", e.id},
                        {"family", family_name(e.family)},
                        {"patterns", e.patterns.str()},
                        {"domain", e.domain_text},
                        {"status", status_name(e.status)},
                        {"formula", e.formula_text}});
    }
    nlohmann::json doc{{"version", 1}, {"formulas", std::move(rows)}};
    return pretty ? doc.dump(2) : doc.dump();
}

}  // namespace combx
