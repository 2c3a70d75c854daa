#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "combx/bigint.hpp"
#include "combx/perm.hpp"
#include "combx/poset.hpp"
#include "combx/series.hpp"

namespace combx {

enum class FormulaStatus { Proven, Conjectured, ObservedOnly };

std::string status_name(FormulaStatus s);  // "proven" / "conjectured" / "observed_only"

// Thrown when a formula is evaluated outside its declared (s,t) domain or has
// no evaluator at all; callers treat it as "use another engine".
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One row of the formula registry: a counting rule for the avoiders among the
// linear extensions of an even comb, valid on a declared parameter domain.
// Observed-only rows document families where no closed form is known; they
// carry no evaluator and their domain predicate is empty everywhere.
struct FormulaEntry {
    std::string id;
    Family family = Family::Alpha;
    PatternSet patterns;
    std::string domain_text;
    std::string formula_text;
    FormulaStatus status = FormulaStatus::Proven;
    std::function<bool(int s, int t)> in_domain;
    std::function<BigCount(int s, int t)> evaluator;  // null when status is ObservedOnly
};

BigCount catalan(int k);               // k >= 0
BigCount fuss_catalan(int s, int t);   // s >= 0, t >= 1; counts (t+1)-ary trees on s nodes

// Shared recurrence for the two alpha pair families whose counts agree:
// f(s,n) = 1 for n <= s, 2^(n-s) for s < n < 2s, else 2 f(s,n-1) - f(s,n-s-1).
// At n = s*t this is the even-comb value; other n cover the uneven combs.
BigCount recurrence_231_312_alpha(int s, int n);

// First `terms` coefficients of 1 / (1 - x*C(x)*C(x*C(x))) where C is the
// Catalan series; coefficient s counts one observed alpha family at t = 2.
PowerSeries gf_231_alpha_t2(int terms);

// Evaluate an entry at even-comb parameters (s,t); throws DomainError outside
// entry.in_domain or when the entry has no evaluator.
BigCount evaluate(const FormulaEntry& entry, int s, int t);

class FormulaRegistry {
public:
    static const FormulaRegistry& instance();

    const std::vector<FormulaEntry>& entries() const { return entries_; }
    const FormulaEntry* find(std::string_view id) const;  // nullptr when absent
    // all rows for a family/pattern-set combination (closed forms plus any
    // observed-only marker), in registry order
    std::vector<const FormulaEntry*> lookup(Family family, const PatternSet& ps) const;

    std::string to_json(bool pretty = true) const;

private:
    FormulaRegistry();
    std::vector<FormulaEntry> entries_;
};

}  // namespace combx
