#include "combx/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "combx/enumerate.hpp"
#include "combx/formulas.hpp"
#include "combx/gentree.hpp"
#include "combx/oeis.hpp"
#include "combx/poset.hpp"
#include "combx/sequences.hpp"

namespace combx {

namespace {

// flag-value problems discovered after CLI11 parsing; reported like any other
// usage error (exit 2)
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PatternSet parse_avoid(const std::vector<std::string>& avoid) {
    std::string joined;
    for (const auto& a : avoid) {
        if (!joined.empty()) joined += ',';
        joined += a;
    }
    try {
        return PatternSet::parse(joined);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --avoid value: ") + e.what());
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep != std::string::npos) {
            const int lo = std::stoi(text.substr(0, sep));
            const int hi = std::stoi(text.substr(sep + 2));
            if (lo >= 1 && hi >= lo) return {lo, hi};
        }
    } catch (const std::exception&) {
        // fall through to the shared message
    }
    throw UsageError("bad --range '" + text + "': expected A..B with 1 <= A <= B");
}

struct EngineResult {
    BigCount count;
    std::string source;  // "brute", "gentree", "formula:<id>", "formula:hook-length"
};

const FormulaEntry* registry_cover(Family family, const PatternSet& ps, int s, int t,
                                   bool proven_only) {
    for (const auto* e : FormulaRegistry::instance().lookup(family, ps)) {
        if (!e->evaluator || !e->in_domain(s, t)) continue;
        if (proven_only && e->status != FormulaStatus::Proven) continue;
        return e;
    }
    return nullptr;
}

// the two alpha pair families share one recurrence that is valid at every
// element count, even and uneven alike
const char* uneven_recurrence_id(const PatternSet& ps) {
    static const PatternSet a = PatternSet::parse("231,312");
    static const PatternSet b = PatternSet::parse("312,321");
    if (ps == a) return "alpha.231_312";
    if (ps == b) return "alpha.312_321";
    return nullptr;
}

bool gentree_covers_cli(Family family, const PatternSet& ps, int t) {
    return family == Family::Beta && ps == PatternSet::parse("312") && t >= 2;
}

// one-point counting used by the count subcommand; handles uneven combs and
// therefore cannot just delegate to build_table
EngineResult count_one(const CombSpec& spec, const PatternSet& ps, Method method, int threads) {
    const int n = spec.element_count();
    const auto* even = std::get_if<EvenShape>(&spec.shape);
    const int s = even ? even->s : (std::holds_alternative<UnevenAlphaShape>(spec.shape)
                                        ? std::get<UnevenAlphaShape>(spec.shape).s
                                        : 0);
    const int t = even ? even->t : (std::holds_alternative<UnevenBetaShape>(spec.shape)
                                        ? std::get<UnevenBetaShape>(spec.shape).t
                                        : 0);
    auto brute = [&]() -> EngineResult {
        return {count_avoiding(build_comb(spec), ps, threads), "brute"};
    };
    auto formula = [&]() -> std::optional<EngineResult> {
        if (even) {
            if (const auto* e = registry_cover(spec.family, ps, s, t, method == Method::Auto))
                return EngineResult{evaluate(*e, s, t), "formula:" + e->id};
            return std::nullopt;
        }
        if (spec.family == Family::Alpha) {
            if (const char* id = uneven_recurrence_id(ps))
                return EngineResult{recurrence_231_312_alpha(s, n), std::string("formula:") + id};
        }
        return std::nullopt;
    };
    auto gentree = [&]() -> std::optional<EngineResult> {
        if (!gentree_covers_cli(spec.family, ps, t)) return std::nullopt;
        return EngineResult{succession_profiles(t, n).back().total(), "gentree"};
    };
    switch (method) {
        case Method::Brute:
            return brute();
        case Method::Formula: {
            if (auto r = formula()) return *r;
            throw DomainError("no formula covers " + spec.str() + " avoiding {" + ps.str() + "}");
        }
        case Method::GenTree: {
            if (auto r = gentree()) return *r;
            throw DomainError("the succession DP only counts beta {312} extensions with t >= 2");
        }
        case Method::Auto: {
            if (ps.empty() && build_comb(spec).is_forest())
                return {knuth_count(build_comb(spec)), "formula:hook-length"};
            if (auto r = formula()) return *r;
            if (auto r = gentree()) return *r;
            return brute();
        }
        case Method::Series:
            break;
    }
    throw DomainError("method not usable here");
}

struct CountArgs {
    std::string family;
    int s = 0, t = 0, n = 0;
    bool has_s = false, has_t = false, has_n = false;
    std::vector<std::string> avoid;
    std::string method = "auto";
    bool json = false;
};

int run_count(const CountArgs& a, int threads, std::ostream& out) {
    const Family family = parse_family(a.family);
    CombSpec spec;
    if (a.has_n) {
        if (family == Family::Alpha) {
            if (!a.has_s || a.has_t)
                throw UsageError("an uneven alpha comb takes --s and --n (and no --t)");
            spec = CombSpec::uneven_alpha(a.s, a.n);
        } else {
            if (!a.has_t || a.has_s)
                throw UsageError("an uneven beta comb takes --t and --n (and no --s)");
            spec = CombSpec::uneven_beta(a.t, a.n);
        }
    } else {
        if (!a.has_s || !a.has_t) throw UsageError("count needs --s and --t (or --n for uneven combs)");
        spec = CombSpec::even(family, a.s, a.t);
    }
    const PatternSet ps = parse_avoid(a.avoid);
    const EngineResult res = count_one(spec, ps, parse_method(a.method), threads);
    if (a.json) {
        nlohmann::json doc{{"family", family_name(family)},
                           {"patterns", ps.str()},
                           {"n", spec.element_count()},
                           {"count", res.count.str()},
                           {"method", res.source.substr(0, res.source.find(':'))},
                           {"source", res.source}};
        if (a.has_s) doc["s"] = a.s;
        if (a.has_t) doc["t"] = a.t;
        out << doc.dump(2) << '\n';
    } else {
        out << res.count.str() << '\n';
    }
    return 0;
}

int run_enumerate(const std::string& family, int s, int t, const std::vector<std::string>& avoid,
                  std::optional<long long> limit, std::ostream& out) {
    const Poset p = build_comb(CombSpec::even(parse_family(family), s, t));
    for (const auto& v : list_avoiding(p, parse_avoid(avoid), limit)) out << v.str() << '\n';
    return 0;
}

struct TableArgs {
    std::string family;
    std::vector<std::string> avoid;
    std::string vary = "s";
    int fixed = 0;
    std::string range;
    std::string format = "text";
    std::string method = "auto";
};

SequenceKey make_key(const std::string& family, const std::vector<std::string>& avoid,
                     const std::string& vary, int fixed, const std::string& range) {
    SequenceKey key;
    key.family = parse_family(family);
    key.patterns = parse_avoid(avoid);
    if (key.patterns.empty()) throw UsageError("at least one --avoid pattern is required");
    key.axis = vary == "s" ? Axis::VaryS : Axis::VaryT;
    key.fixed = fixed;
    std::tie(key.lo, key.hi) = parse_range(range);
    return key;
}

int run_table(const TableArgs& a, int threads, std::ostream& out, std::ostream& err) {
    const SequenceKey key = make_key(a.family, a.avoid, a.vary, a.fixed, a.range);
    const Method method = parse_method(a.method);
    const Cache cache = Cache::from_env();
    SequenceRecord rec;
    if (auto hit = cache.get(key, method)) {
        rec = std::move(*hit);
    } else {
        rec = build_table(key, {method, 14, threads});
        try {
            cache.put(rec);
        } catch (const std::exception& e) {
            err << "warning: cache write failed: " << e.what() << '\n';
        }
    }
    out << render_table(rec, parse_table_format(a.format));
    return 0;
}

int run_verify(int max_n, int threads, std::ostream& out) {
    const VerificationReport report = verify_all(max_n, threads);
    out << report.str();
    return report.ok() ? 0 : 1;
}

int run_gentree(int t, int levels, bool lattice, bool compare, std::ostream& out) {
    if (compare) {
        const auto succ = succession_profiles(t, levels);
        const auto latt = lattice_profiles(t, levels);
        int mismatches = 0;
        for (int k = 0; k <= levels; ++k) {
            const auto& a = succ[static_cast<size_t>(k)];
            const auto& b = latt[static_cast<size_t>(k)];
            if (a == b) {
                out << a.str() << '\n';
            } else {
                ++mismatches;
                out << "MISMATCH succession " << a.str() << '\n';
                out << "MISMATCH lattice    " << b.str() << '\n';
            }
        }
        out << (mismatches == 0 ? "profiles identical\n"
                                : "profiles differ at " + std::to_string(mismatches) + " level(s)\n");
        return mismatches == 0 ? 0 : 1;
    }
    const auto profiles = lattice ? lattice_profiles(t, levels) : succession_profiles(t, levels);
    for (const auto& prof : profiles) out << prof.str() << '\n';
    return 0;
}

int run_oeis(const std::string& family, const std::vector<std::string>& avoid,
             const std::string& vary, int fixed, const std::string& range, int threads,
             std::ostream& out, std::ostream& err) {
    const SequenceKey key = make_key(family, avoid, vary, fixed, range);
    if (key.points() < 4) throw UsageError("the lookup needs a range of at least 4 terms");
    const SequenceRecord rec = build_table(key, {Method::Auto, 14, threads});
    std::string joined;
    for (const auto& term : rec.terms) {
        if (!joined.empty()) joined += ',';
        joined += term.str();
    }
    out << "query: " << joined << '\n';
    const OeisResult res = oeis_lookup(rec.terms);
    switch (res.status) {
        case OeisStatus::Offline:
            out << "offline: lookup skipped (COMBX_OFFLINE is set)\n";
            return 0;
        case OeisStatus::Error:
            err << "error: lookup failed: " << res.error << '\n';
            return 1;
        case OeisStatus::Ok:
            break;
    }
    if (res.matches.empty()) {
        out << "no matches\n";
        return 0;
    }
    for (const auto& m : res.matches)
        out << m.sequence_id << " offset=" << m.matched_offset << " " << m.name << '\n';
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counts of pattern-avoiding linear extensions of comb posets"};
    app.name("combx");
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for brute-force counting")
        ->check(CLI::PositiveNumber);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count the avoiding extensions of one comb");
    count->add_option("--family", count_args.family, "comb family")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    count->add_option("--s", count_args.s, "teeth count");
    count->add_option("--t", count_args.t, "tooth length");
    count->add_option("--n", count_args.n, "element count of an uneven comb");
    count->add_option("--avoid", count_args.avoid, "patterns to avoid (repeatable or comma-separated)");
    count->add_option("--method", count_args.method, "engine")
        ->check(CLI::IsMember({"auto", "brute", "formula", "gentree"}));
    count->add_flag("--json", count_args.json, "emit a JSON object instead of a bare count");

    std::string enum_family;
    int enum_s = 0, enum_t = 0;
    long long enum_limit = 0;
    std::vector<std::string> enum_avoid;
    auto* enumerate = app.add_subcommand("enumerate", "list the avoiding extensions of one comb");
    enumerate->add_option("--family", enum_family, "comb family")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    enumerate->add_option("--s", enum_s, "teeth count")->required();
    enumerate->add_option("--t", enum_t, "tooth length")->required();
    enumerate->add_option("--avoid", enum_avoid, "patterns to avoid (repeatable or comma-separated)");
    auto* limit_opt = enumerate->add_option("--limit", enum_limit, "stop after this many extensions");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "tabulate counts over a parameter range");
    table->add_option("--family", table_args.family, "comb family")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    table->add_option("--avoid", table_args.avoid, "patterns to avoid (repeatable or comma-separated)")
        ->required();
    table->add_option("--vary", table_args.vary, "which parameter runs over the range")
        ->required()
        ->check(CLI::IsMember({"s", "t"}));
    table->add_option("--fixed", table_args.fixed, "value of the non-varying parameter")->required();
    table->add_option("--range", table_args.range, "inclusive range A..B for the varying parameter")
        ->required();
    table->add_option("--format", table_args.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--method", table_args.method, "engine")
        ->check(CLI::IsMember({"auto", "brute", "formula", "gentree"}));

    int verify_max_n = 10;
    auto* verify = app.add_subcommand("verify", "cross-check every formula against brute force");
    verify->add_option("--max-n", verify_max_n, "largest comb size to test")
        ->check(CLI::Range(4, 1000));

    int gt_t = 0, gt_levels = 0;
    bool gt_lattice = false, gt_compare = false;
    auto* gentree = app.add_subcommand("gentree", "level profiles of the generating-tree DP");
    gentree->add_option("--t", gt_t, "tooth length")->required()->check(CLI::PositiveNumber);
    gentree->add_option("--levels", gt_levels, "deepest level to produce")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gentree->add_flag("--lattice", gt_lattice, "use the lattice-path tree instead");
    gentree->add_flag("--compare", gt_compare, "run both engines and fail on any difference");

    int paths_t = 0, paths_s = 0;
    auto* paths = app.add_subcommand("paths", "count constrained monotone lattice paths");
    paths->add_option("--t", paths_t, "slope denominator")->required()->check(CLI::PositiveNumber);
    paths->add_option("--s", paths_s, "target height")->required()->check(CLI::NonNegativeNumber);

    int gf_terms = 0;
    auto* gf231 = app.add_subcommand("gf231", "expand the alpha/231 t=2 generating function");
    gf231->add_option("--terms", gf_terms, "number of coefficients")
        ->required()
        ->check(CLI::PositiveNumber);

    TableArgs oeis_args;
    auto* oeis = app.add_subcommand("oeis", "look a table row up in the sequence database");
    oeis->add_option("--family", oeis_args.family, "comb family")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    oeis->add_option("--avoid", oeis_args.avoid, "patterns to avoid (repeatable or comma-separated)")
        ->required();
    oeis->add_option("--vary", oeis_args.vary, "which parameter runs over the range")
        ->required()
        ->check(CLI::IsMember({"s", "t"}));
    oeis->add_option("--fixed", oeis_args.fixed, "value of the non-varying parameter")->required();
    oeis->add_option("--range", oeis_args.range, "inclusive range A..B for the varying parameter")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun 'combx --help' for usage\n";
        return 2;
    }

    try {
        count_args.has_s = count->count("--s") > 0;
        count_args.has_t = count->count("--t") > 0;
        count_args.has_n = count->count("--n") > 0;
        if (*count) return run_count(count_args, threads, out);
        if (*enumerate)
            return run_enumerate(enum_family, enum_s, enum_t, enum_avoid,
                                 limit_opt->count() ? std::optional(enum_limit) : std::nullopt, out);
        if (*table) return run_table(table_args, threads, out, err);
        if (*verify) return run_verify(verify_max_n, threads, out);
        if (*gentree) return run_gentree(gt_t, gt_levels, gt_lattice, gt_compare, out);
        if (*paths) {
            out << count_lattice_paths(paths_t, paths_s).str() << '\n';
            return 0;
        }
        if (*gf231) {
            const auto coeffs = gf_231_alpha_t2(gf_terms).integer_coeffs();
            for (size_t k = 0; k < coeffs.size(); ++k) out << k << ' ' << coeffs[k].str() << '\n';
            return 0;
        }
        if (*oeis)
            return run_oeis(oeis_args.family, oeis_args.avoid, oeis_args.vary, oeis_args.fixed,
                            oeis_args.range, threads, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nrun 'combx --help' for usage\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}

}  // namespace combx
