#include "combx/sequences.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "combx/enumerate.hpp"
#include "combx/gentree.hpp"

namespace combx {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string now_rfc3339() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json key_to_json(const SequenceKey& k) {
    return {{"family", family_name(k.family)}, {"patterns", k.patterns.str()},
            {"axis", axis_name(k.axis)},       {"fixed", k.fixed},
            {"lo", k.lo},                      {"hi", k.hi}};
}

SequenceKey key_from_json(const json& j) {
    SequenceKey k;
    k.family = parse_family(j.at("family").get<std::string>());
    k.patterns = PatternSet::parse(j.at("patterns").get<std::string>());
    const auto axis = j.at("axis").get<std::string>();
    if (axis == "s") k.axis = Axis::VaryS;
    else if (axis == "t") k.axis = Axis::VaryT;
    else throw std::invalid_argument("axis must be 's' or 't'");
    k.fixed = j.at("fixed").get<int>();
    k.lo = j.at("lo").get<int>();
    k.hi = j.at("hi").get<int>();
    return k;
}

const PatternSet& pattern_312() {
    static const PatternSet ps = PatternSet::parse("312");
    return ps;
}

bool gentree_covers(Family family, const PatternSet& ps, int t) {
    // the succession DP models exactly the 312-avoiding beta extensions, and
    // its level totals only equal the true counts once teeth have length >= 2
    return family == Family::Beta && ps == pattern_312() && t >= 2;
}

const FormulaEntry* formula_cover(Family family, const PatternSet& ps, int s, int t,
                                  bool proven_only) {
    for (const auto* e : FormulaRegistry::instance().lookup(family, ps)) {
        if (!e->evaluator || !e->in_domain(s, t)) continue;
        if (proven_only && e->status != FormulaStatus::Proven) continue;
        return e;
    }
    return nullptr;
}

BigCount gentree_count(int s, int t) {
    return succession_profiles(t, s * t).back().total();
}

BigCount brute_count(Family family, const PatternSet& ps, int s, int t, int threads) {
    return count_avoiding(build_comb(CombSpec::even(family, s, t)), ps, threads);
}

}  // namespace

std::string axis_name(Axis a) { return a == Axis::VaryS ? "s" : "t"; }

std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Brute: return "brute";
        case Method::Formula: return "formula";
        case Method::GenTree: return "gentree";
        case Method::Series: return "series";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "auto") return Method::Auto;
    if (name == "brute") return Method::Brute;
    if (name == "formula") return Method::Formula;
    if (name == "gentree") return Method::GenTree;
    if (name == "series") return Method::Series;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::pair<int, int> SequenceKey::st_at(int index) const {
    const int v = lo + index;
    return axis == Axis::VaryS ? std::pair{v, fixed} : std::pair{fixed, v};
}

std::string SequenceKey::canonical() const { return key_to_json(*this).dump(); }

SequenceRecord build_table(const SequenceKey& key, const TableOptions& opts) {
    if (key.lo < 1 || key.hi < key.lo)
        throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
    if (key.fixed < 1) throw std::invalid_argument("fixed parameter must be >= 1");
    SequenceRecord rec;
    rec.key = key;
    rec.method = opts.method;
    rec.computed_at = now_rfc3339();
    for (int i = 0; i < key.points(); ++i) {
        const auto [s, t] = key.st_at(i);
        const long long n = static_cast<long long>(s) * t;
        switch (opts.method) {
            case Method::Brute: {
                if (n > opts.brute_limit)
                    throw BudgetExceeded("comb with n=" + std::to_string(n) +
                                         " exceeds the brute-force budget of " +
                                         std::to_string(opts.brute_limit));
                rec.terms.push_back(brute_count(key.family, key.patterns, s, t, opts.threads));
                rec.sources.push_back("brute");
                break;
            }
            case Method::Formula: {
                const auto* e = formula_cover(key.family, key.patterns, s, t, false);
                if (!e)
                    throw DomainError("no formula covers " + family_name(key.family) + " {" +
                                      key.patterns.str() + "} at s=" + std::to_string(s) +
                                      ", t=" + std::to_string(t));
                rec.terms.push_back(evaluate(*e, s, t));
                rec.sources.push_back("formula:" + e->id);
                break;
            }
            case Method::GenTree: {
                if (!gentree_covers(key.family, key.patterns, t))
                    throw DomainError("the succession DP only counts beta {312} tables with t >= 2");
                rec.terms.push_back(gentree_count(s, t));
                rec.sources.push_back("gentree");
                break;
            }
            case Method::Auto: {
                if (const auto* e = formula_cover(key.family, key.patterns, s, t, true)) {
                    rec.terms.push_back(evaluate(*e, s, t));
                    rec.sources.push_back("formula:" + e->id);
                } else if (gentree_covers(key.family, key.patterns, t)) {
                    rec.terms.push_back(gentree_count(s, t));
                    rec.sources.push_back("gentree");
                } else if (n <= opts.brute_limit) {
                    rec.terms.push_back(brute_count(key.family, key.patterns, s, t, opts.threads));
                    rec.sources.push_back("brute");
                } else {
                    throw BudgetExceeded("no engine covers " + family_name(key.family) + " {" +
                                         key.patterns.str() + "} at s=" + std::to_string(s) +
                                         ", t=" + std::to_string(t) + " within the budget of n <= " +
                                         std::to_string(opts.brute_limit));
                }
                break;
            }
            case Method::Series:
                throw DomainError("the series engine does not produce tables");
        }
    }
    return rec;
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "text") return TableFormat::Text;
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    throw std::invalid_argument("format must be text, csv, or json");
}

std::string render_table(const SequenceRecord& rec, TableFormat format) {
    struct Row {
        std::string s, t, count, method;
    };
    std::vector<Row> rows;
    for (int i = 0; i < rec.key.points(); ++i) {
        const auto [s, t] = rec.key.st_at(i);
        const std::string src = i < static_cast<int>(rec.sources.size()) ? rec.sources[i] : "";
        rows.push_back({std::to_string(s), std::to_string(t),
                        rec.terms[static_cast<size_t>(i)].str(),
                        src.substr(0, src.find(':'))});
    }
    switch (format) {
        case TableFormat::Csv: {
            std::string out = "s,t,count,method\n";
            for (const auto& r : rows)
                out += r.s + "," + r.t + "," + r.count + "," + r.method + "\n";
            return out;
        }
        case TableFormat::Json: {
            json arr = json::array();
            for (int i = 0; i < rec.key.points(); ++i) {
                const auto [s, t] = rec.key.st_at(i);
                arr.push_back({{"s", s},
                               {"t", t},
                               {"count", rec.terms[static_cast<size_t>(i)].str()},
                               {"method", rows[static_cast<size_t>(i)].method},
                               {"source", rec.sources[static_cast<size_t>(i)]}});
            }
            return arr.dump(2) + "\n";
        }
        case TableFormat::Text: {
            Row head{"s", "t", "count", "method"};
            size_t ws = head.s.size(), wt = head.t.size(), wc = head.count.size();
            for (const auto& r : rows) {
                ws = std::max(ws, r.s.size());
                wt = std::max(wt, r.t.size());
                wc = std::max(wc, r.count.size());
            }
            auto pad = [](const std::string& v, size_t w) {
                return std::string(w - v.size(), ' ') + v;
            };
            std::string out = pad(head.s, ws) + "  " + pad(head.t, wt) + "  " +
                              pad(head.count, wc) + "  " + head.method + "\n";
            for (const auto& r : rows)
                out += pad(r.s, ws) + "  " + pad(r.t, wt) + "  " + pad(r.count, wc) + "  " +
                       r.method + "\n";
            return out;
        }
    }
    return {};
}

std::string VerificationReport::str() const {
    std::string out;
    for (const auto& c : checks) {
        std::string tag = c.pass ? "pass" : (c.status == FormulaStatus::Conjectured ? "FINDING" : "FAIL");
        out += tag + "  " + c.entry_id + " s=" + std::to_string(c.s) + " t=" + std::to_string(c.t) +
               "  brute=" + c.brute.str() + " formula=" + c.formula.str();
        if (c.gentree) out += " gentree=" + c.gentree->str();
        if (c.status == FormulaStatus::Conjectured) out += "  [conjectured]";
        out += '\n';
    }
    out += "checks: " + std::to_string(checks.size()) +
           "  proven failures: " + std::to_string(proven_failures) +
           "  conjecture findings: " + std::to_string(conjecture_findings) + "\n";
    return out;
}

VerificationReport verify_all(int max_n, int threads) {
    return verify_entries(FormulaRegistry::instance().entries(), max_n, threads);
}

VerificationReport verify_entries(const std::vector<FormulaEntry>& entries, int max_n,
                                  int threads) {
    if (max_n < 4) throw std::invalid_argument("verification needs max_n >= 4");
    VerificationReport report;
    for (const auto& entry : entries) {
        if (!entry.evaluator) continue;  // nothing to compare for observed-only rows
        for (int s = 1; s <= max_n; ++s) {
            for (int t = 1; s * t <= max_n; ++t) {
                if (!entry.in_domain(s, t)) continue;
                VerificationCheck check;
                check.entry_id = entry.id;
                check.status = entry.status;
                check.s = s;
                check.t = t;
                check.brute = brute_count(entry.family, entry.patterns, s, t, threads);
                check.formula = entry.evaluator(s, t);
                check.pass = check.brute == check.formula;
                if (gentree_covers(entry.family, entry.patterns, t)) {
                    check.gentree = gentree_count(s, t);
                    check.pass = check.pass && *check.gentree == check.brute;
                }
                if (!check.pass) {
                    if (entry.status == FormulaStatus::Conjectured)
                        ++report.conjecture_findings;
                    else
                        ++report.proven_failures;
                }
                report.checks.push_back(std::move(check));
            }
        }
    }
    return report;
}

namespace {

json record_to_json(const SequenceRecord& rec) {
    json terms = json::array();
    for (const auto& t : rec.terms) terms.push_back(t.str());
    return {{"key", key_to_json(rec.key)},
            {"method", method_name(rec.method)},
            {"terms", std::move(terms)},
            {"sources", rec.sources},
            {"computed_at", rec.computed_at}};
}

SequenceRecord record_from_json(const json& j) {
    SequenceRecord rec;
    rec.key = key_from_json(j.at("key"));
    rec.method = parse_method(j.at("method").get<std::string>());
    for (const auto& t : j.at("terms")) rec.terms.emplace_back(t.get<std::string>());
    rec.sources = j.value("sources", std::vector<std::string>{});
    rec.computed_at = j.value("computed_at", std::string{});
    return rec;
}

constexpr int kCacheVersion = 1;

// entries array from a cache file; empty when the file is missing, stale, or
// unreadable (a corrupt cache must never break a computation)
json load_entries(const fs::path& file) {
    std::error_code ec;
    if (!fs::exists(file, ec)) return json::array();
    std::ifstream in(file);
    json doc;
    try {
        doc = json::parse(in);
        if (!doc.is_object() || doc.value("version", -1) != kCacheVersion) return json::array();
        auto& entries = doc.at("entries");
        if (!entries.is_array()) return json::array();
        return std::move(entries);
    } catch (const json::exception& e) {
        std::fprintf(stderr, "warning: ignoring corrupt cache file %s (%s)\n",
                     file.string().c_str(), e.what());
        return json::array();
    }
}

}  // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) throw std::invalid_argument("cache directory must not be empty");
}

Cache Cache::from_env() {
    if (const char* env = std::getenv("COMBX_CACHE_DIR"); env && *env) return Cache(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return Cache((fs::path(xdg) / "combx").string());
    if (const char* home = std::getenv("HOME"); home && *home)
        return Cache((fs::path(home) / ".cache" / "combx").string());
    return Cache(".combx-cache");
}

std::string Cache::file_path() const { return (fs::path(dir_) / "tables.json").string(); }

std::optional<SequenceRecord> Cache::get(const SequenceKey& key, Method method) const {
    const json want_key = key_to_json(key);
    const std::string want_method = method_name(method);
    for (const auto& entry : load_entries(file_path())) {
        if (!entry.is_object()) continue;
        if (entry.value("method", "") != want_method) continue;
        if (!entry.contains("key") || entry["key"] != want_key) continue;
        try {
            return record_from_json(entry);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "warning: ignoring malformed cache entry (%s)\n", e.what());
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void Cache::put(const SequenceRecord& record) const {
    const fs::path file = file_path();
    json entries = load_entries(file);
    const json mine = record_to_json(record);
    json kept = json::array();
    for (auto& entry : entries) {
        if (entry.is_object() && entry.value("method", "") == mine["method"] &&
            entry.contains("key") && entry["key"] == mine["key"])
            continue;  // replaced below
        kept.push_back(std::move(entry));
    }
    kept.push_back(mine);
    std::sort(kept.begin(), kept.end(), [](const json& a, const json& b) {
        auto rank = [](const json& e) {
            return e.value("key", json::object()).dump() + "|" + e.value("method", "");
        };
        return rank(a) < rank(b);
    });
    json doc{{"version", kCacheVersion}, {"entries", std::move(kept)}};

    fs::create_directories(dir_);
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << doc.dump(2) << '\n';
    }
    fs::rename(tmp, file);
}

}  // namespace combx
