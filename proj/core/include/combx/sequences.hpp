#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "combx/bigint.hpp"
#include "combx/formulas.hpp"
#include "combx/perm.hpp"
#include "combx/poset.hpp"

namespace combx {

enum class Axis { VaryS, VaryT };
enum class Method { Auto, Brute, Formula, GenTree, Series };

std::string axis_name(Axis a);        // "s" / "t"
std::string method_name(Method m);    // lowercase
Method parse_method(std::string_view name);

// Identifies one row family of a count table: fix one comb parameter, vary
// the other over an inclusive range. Canonical serialization doubles as the
// cache key.
struct SequenceKey {
    Family family = Family::Alpha;
    PatternSet patterns;
    Axis axis = Axis::VaryS;
    int fixed = 1;  // value of the non-varying parameter
    int lo = 1;
    int hi = 1;     // inclusive

    int points() const { return hi - lo + 1; }
    std::pair<int, int> st_at(int index) const;  // (s,t) of the index-th point
    std::string canonical() const;               // deterministic JSON

    bool operator==(const SequenceKey&) const = default;
};

struct SequenceRecord {
    SequenceKey key;
    std::vector<BigCount> terms;
    Method method = Method::Auto;       // the requested method
    std::vector<std::string> sources;   // per-term engine: "brute", "formula:<id>", "gentree"
    std::string computed_at;            // RFC3339 UTC

    bool operator==(const SequenceRecord&) const = default;
};

// Raised when only brute force could answer but the comb is larger than the
// configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TableOptions {
    Method method = Method::Auto;
    int brute_limit = 14;  // largest element count brute force may attempt
    int threads = 1;
};

// Compute one table row. Auto prefers a proven formula, then the succession
// DP (beta 312 families with t >= 2), then brute force within budget.
SequenceRecord build_table(const SequenceKey& key, const TableOptions& opts = {});

enum class TableFormat { Text, Csv, Json };

TableFormat parse_table_format(std::string_view name);
std::string render_table(const SequenceRecord& rec, TableFormat format);

// One compared point of the cross-engine verification run.
struct VerificationCheck {
    std::string entry_id;
    FormulaStatus status = FormulaStatus::Proven;
    int s = 0;
    int t = 0;
    BigCount brute;
    BigCount formula;
    std::optional<BigCount> gentree;  // only for entries the succession DP covers
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    int proven_failures = 0;
    int conjecture_findings = 0;

    bool ok() const { return proven_failures == 0; }
    std::string str() const;
};

// Compare brute force against every registry formula (and the succession DP
// where it applies) on every in-domain comb with at most max_n elements.
// Mismatches on conjectured entries are findings, not failures.
VerificationReport verify_all(int max_n, int threads = 1);

// Same cross-check over an explicit entry list; verify_all passes the
// registry through here.
VerificationReport verify_entries(const std::vector<FormulaEntry>& entries, int max_n,
                                  int threads = 1);

// Single-file JSON cache of table rows, keyed by (key, requested method).
// Unknown schema versions and unreadable files are treated as empty; writes
// go through a temp file and rename.
class Cache {
public:
    explicit Cache(std::string dir);
    static Cache from_env();  // COMBX_CACHE_DIR, else the user cache directory

    const std::string& dir() const { return dir_; }
    std::optional<SequenceRecord> get(const SequenceKey& key, Method method) const;
    void put(const SequenceRecord& record) const;

private:
    std::string file_path() const;
    std::string dir_;
};

}  // namespace combx
