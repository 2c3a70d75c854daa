#include <algorithm>
#include <vector>

#include <combx/enumerate.hpp>
#include <combx/poset.hpp>
#include <doctest.h>

using namespace combx;

namespace {

std::vector<Permutation> drain(const Poset& p) {
    ExtensionIterator it(p);
    std::vector<Permutation> out;
    while (auto v = it.next()) out.push_back(*v);
    return out;
}

const std::vector<PatternSet>& small_pattern_sets() {
    // all singletons and pairs over the six length-3 patterns
    static const std::vector<PatternSet> sets = [] {
        const char* names[] = {"123", "132", "213", "231", "312", "321"};
        std::vector<PatternSet> out;
        for (int i = 0; i < 6; ++i) {
            out.push_back(PatternSet::parse(names[i]));
            for (int j = i + 1; j < 6; ++j)
                out.push_back(PatternSet::parse(std::string(names[i]) + "," + names[j]));
        }
        return out;
    }();
    return sets;
}

}  // namespace

TEST_CASE("iterator yields exactly the extensions, sorted, each one valid") {
    const Poset diamond(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    const auto exts = drain(diamond);
    REQUIRE(exts.size() == 2);
    CHECK(exts[0] == Permutation({1, 2, 3, 4}));
    CHECK(exts[1] == Permutation({1, 3, 2, 4}));

    const auto chain_exts = drain(chain(5));
    REQUIRE(chain_exts.size() == 1);
    CHECK(chain_exts[0] == Permutation::identity(5));

    const auto comb_exts = drain(build_comb(CombSpec::even(Family::Beta, 2, 2)));
    REQUIRE(comb_exts.size() == 3);
    CHECK(comb_exts[0] == Permutation({1, 2, 3, 4}));
    CHECK(comb_exts[1] == Permutation({1, 3, 2, 4}));
    CHECK(comb_exts[2] == Permutation({1, 3, 4, 2}));
}

TEST_CASE("iterator is exhausted exactly once and stays exhausted") {
    const Poset pair = antichain(2);
    ExtensionIterator it(pair);
    CHECK(it.next().has_value());
    CHECK(it.next().has_value());
    CHECK_FALSE(it.next().has_value());
    CHECK_FALSE(it.next().has_value());

    // the empty poset has one extension: the empty permutation
    const Poset nothing = antichain(0);
    ExtensionIterator empty(nothing);
    auto first = empty.next();
    REQUIRE(first.has_value());
    CHECK(first->empty());
    CHECK_FALSE(empty.next().has_value());
}

TEST_CASE("every yielded sequence is an extension and they are strictly increasing") {
    for (Family f : {Family::Alpha, Family::Beta}) {
        const Poset p = build_comb(CombSpec::even(f, 3, 3));
        ExtensionIterator it(p);
        std::optional<Permutation> prev;
        long long count = 0;
        while (auto v = it.next()) {
            REQUIRE(is_extension(p, *v));
            if (prev) REQUIRE(*prev < *v);
            prev = *v;
            ++count;
        }
        CHECK(count == 280);
    }
}

TEST_CASE("count_extensions equals the hook length count on forests") {
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; s * t <= 9; ++t)
            for (Family f : {Family::Alpha, Family::Beta}) {
                const Poset p = build_comb(CombSpec::even(f, s, t));
                CHECK(count_extensions(p) == knuth_count(p));
            }
    // and handles non-forests the hook rule rejects
    CHECK(count_extensions(Poset(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}})) == 2);
}

TEST_CASE("avoiding counts on known combs") {
    CHECK(count_avoiding(build_comb(CombSpec::even(Family::Beta, 3, 2)),
                         PatternSet::parse("312")) == 12);
    CHECK(count_avoiding(build_comb(CombSpec::even(Family::Alpha, 4, 2)),
                         PatternSet::parse("213")) == 14);
    CHECK(count_avoiding(build_comb(CombSpec::even(Family::Alpha, 4, 3)),
                         PatternSet::parse("231,312")) == 208);
    CHECK(count_avoiding(build_comb(CombSpec::even(Family::Alpha, 2, 2)),
                         PatternSet::parse("123")) == 0);
    CHECK(count_avoiding(build_comb(CombSpec::even(Family::Beta, 4, 3)),
                         PatternSet::parse("132")) == 1);
    // an empty pattern set counts all extensions
    const Poset p = build_comb(CombSpec::even(Family::Beta, 3, 3));
    CHECK(count_avoiding(p, PatternSet{}) == knuth_count(p));
}

TEST_CASE("pruned counting equals filtering the full stream") {
    // every comb on at most 9 elements, both families, all pattern sets of
    // size <= 2 over the length-3 patterns
    for (int s = 1; s <= 9; ++s) {
        for (int t = 1; s * t <= 9; ++t) {
            for (Family f : {Family::Alpha, Family::Beta}) {
                const Poset p = build_comb(CombSpec::even(f, s, t));
                const auto exts = drain(p);
                for (const auto& ps : small_pattern_sets()) {
                    long long filtered = 0;
                    for (const auto& v : exts)
                        if (!contains_any(v, ps)) ++filtered;
                    CAPTURE(s);
                    CAPTURE(t);
                    CAPTURE(ps.str());
                    REQUIRE(count_avoiding(p, ps) == BigCount(filtered));
                }
            }
        }
    }
}

TEST_CASE("avoiding count on an antichain reduces to plain avoider counting") {
    for (int n = 0; n <= 7; ++n) {
        for (const char* ps : {"231", "231,312", "321,123"}) {
            CHECK(count_avoiding(antichain(n), PatternSet::parse(ps)) ==
                  count_avoiders(n, PatternSet::parse(ps)));
        }
    }
}

TEST_CASE("multithreaded counting agrees with sequential") {
    const std::vector<std::pair<CombSpec, const char*>> cases = {
        {CombSpec::even(Family::Beta, 6, 2), "312"},
        {CombSpec::even(Family::Alpha, 4, 3), "231,312"},
        {CombSpec::even(Family::Alpha, 6, 2), "321"},
        {CombSpec::even(Family::Beta, 4, 3), "321"},
        {CombSpec::even(Family::Alpha, 3, 3), ""},
    };
    for (const auto& [spec, ps_text] : cases) {
        const Poset p = build_comb(spec);
        const PatternSet ps = PatternSet::parse(ps_text);
        const BigCount sequential = count_avoiding(p, ps, 1);
        for (int threads : {2, 4, 7}) {
            CAPTURE(spec.str());
            REQUIRE(count_avoiding(p, ps, threads) == sequential);
        }
    }
    // tiny posets where splitting yields fewer branches than workers
    CHECK(count_avoiding(chain(2), PatternSet::parse("12"), 8) == 0);
    CHECK(count_avoiding(antichain(1), PatternSet::parse("1"), 8) == 0);
    CHECK(count_avoiding(antichain(0), PatternSet{}, 8) == 1);
}

TEST_CASE("list_avoiding yields the lexicographic prefix of the avoiders") {
    const Poset p = build_comb(CombSpec::even(Family::Beta, 2, 2));
    const auto all = list_avoiding(p, PatternSet::parse("312"));
    REQUIRE(all.size() == 3);
    CHECK(all[0] == Permutation({1, 2, 3, 4}));
    CHECK(all[2] == Permutation({1, 3, 4, 2}));
    for (const auto& v : all) {
        CHECK(is_extension(p, v));
        CHECK_FALSE(contains(v, Permutation::parse("312")));
    }

    const auto limited = list_avoiding(p, PatternSet::parse("312"), 2);
    REQUIRE(limited.size() == 2);
    CHECK(limited[0] == all[0]);
    CHECK(limited[1] == all[1]);

    CHECK(list_avoiding(p, PatternSet::parse("312"), 0).empty());
    CHECK(list_avoiding(p, PatternSet::parse("312"), -3).empty());
    CHECK(list_avoiding(p, PatternSet::parse("312"), 500).size() == 3);
}
