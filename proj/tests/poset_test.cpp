#include <algorithm>
#include <stdexcept>
#include <vector>

#include <combx/enumerate.hpp>
#include <combx/poset.hpp>
#include <doctest.h>

using namespace combx;

namespace {

// (st)! / (s! * (t!)^s), the closed form for the extension count of either
// comb family with s teeth of length t
BigCount comb_extension_count(int s, int t) {
    BigCount denom = factorial(s);
    const BigCount tooth = factorial(t);
    for (int i = 0; i < s; ++i) denom *= tooth;
    return factorial(s * t) / denom;
}

}  // namespace

TEST_CASE("comb spec construction and labeling") {
    const CombSpec alpha = CombSpec::even(Family::Alpha, 3, 2);
    CHECK(alpha.element_count() == 6);
    CHECK(alpha.str() == "alpha s=3 t=2");
    CHECK(CombSpec::uneven_alpha(3, 7).str() == "alpha uneven s=3 n=7");
    CHECK(CombSpec::uneven_beta(2, 7).str() == "beta uneven t=2 n=7");
    CHECK(CombSpec::uneven_beta(2, 7).element_count() == 7);

    CHECK_THROWS_AS(CombSpec::even(Family::Alpha, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(CombSpec::even(Family::Alpha, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(CombSpec::uneven_alpha(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(CombSpec::uneven_beta(1, -1), std::invalid_argument);
}

TEST_CASE("family names parse both ways") {
    CHECK(family_name(Family::Alpha) == "alpha");
    CHECK(family_name(Family::Beta) == "beta");
    CHECK(parse_family("alpha") == Family::Alpha);
    CHECK(parse_family("beta") == Family::Beta);
    CHECK_THROWS_AS(parse_family("gamma"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("poset construction rejects malformed cover sets") {
    CHECK_NOTHROW(Poset(3, {{1, 2}, {1, 3}}));
    CHECK_THROWS_AS(Poset(2, {{1, 1}}), std::invalid_argument);          // self cover
    CHECK_THROWS_AS(Poset(2, {{0, 1}}), std::invalid_argument);          // label out of range
    CHECK_THROWS_AS(Poset(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset(2, {{1, 2}, {1, 2}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(Poset(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(Poset(2, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("cover accessors and dump") {
    const Poset p(4, {{1, 2}, {1, 3}, {3, 4}});
    CHECK(p.size() == 4);
    CHECK(p.upper_covers(1) == std::vector<int>{2, 3});
    CHECK(p.lower_covers(4) == std::vector<int>{3});
    CHECK(p.lower_covers(1).empty());
    CHECK(p.dump() == "1<2\n1<3\n3<4\n");
    CHECK(Poset(1, {}).dump().empty());
    CHECK(p.is_forest());
    CHECK_FALSE(Poset(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}).is_forest());  // diamond
}

TEST_CASE("even comb cover structure") {
    // alpha: spine 1..s as a chain, tooth chains hang off each spine element
    const Poset a22 = build_comb(CombSpec::even(Family::Alpha, 2, 2));
    CHECK(a22.dump() == "1<2\n1<3\n2<4\n");
    // beta: each tooth is a run of t consecutive labels, spines hop t apart
    const Poset b22 = build_comb(CombSpec::even(Family::Beta, 2, 2));
    CHECK(b22.dump() == "1<2\n1<3\n3<4\n");
    const Poset b23 = build_comb(CombSpec::even(Family::Beta, 3, 2));

    CHECK(b23.dump() == "1<2\n1<3\n3<4\n3<5\n5<6\n");

    // either family: (s-1) spine covers plus s(t-1) tooth covers
    for (int s = 1; s <= 5; ++s) {
        for (int t = 1; t <= 5; ++t) {
            for (Family f : {Family::Alpha, Family::Beta}) {
                const Poset p = build_comb(CombSpec::even(f, s, t));
                CHECK(p.size() == s * t);
                CHECK(static_cast<int>(p.covers().size()) == (s - 1) + s * (t - 1));
                CHECK(p.is_forest());
            }
        }
    }
}

TEST_CASE("uneven combs agree with even combs when the count divides") {
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) {
            const Poset even_a = build_comb(CombSpec::even(Family::Alpha, s, t));
            const Poset uneven_a = build_comb(CombSpec::uneven_alpha(s, s * t));
            CHECK(even_a.covers() == uneven_a.covers());
            const Poset even_b = build_comb(CombSpec::even(Family::Beta, s, t));
            const Poset uneven_b = build_comb(CombSpec::uneven_beta(t, s * t));
            CHECK(even_b.covers() == uneven_b.covers());
        }
}

TEST_CASE("uneven combs grow one cover per element") {
    // alpha with s = 4: spine up to 4 elements, then element k sits above k-4
    const Poset a10 = build_comb(CombSpec::uneven_alpha(4, 10));
    CHECK(a10.dump() ==
          "1<2\n1<5\n2<3\n2<6\n3<4\n3<7\n4<8\n5<9\n6<10\n");
    // beta with t = 3: teeth 1-2-3, 4-5-6, ..., spine hops 1<4<7<10
    const Poset b10 = build_comb(CombSpec::uneven_beta(3, 10));
    CHECK(b10.dump() == "1<2\n1<4\n2<3\n4<5\n4<7\n5<6\n7<8\n7<10\n8<9\n");
    // growing to 11 only appends the cover 10<11
    const Poset b11 = build_comb(CombSpec::uneven_beta(3, 11));
    auto grown = b10.covers();
    grown.emplace_back(10, 11);
    std::sort(grown.begin(), grown.end());
    CHECK(b11.covers() == grown);

    // t = 1 beta comb degenerates to a chain
    CHECK(build_comb(CombSpec::uneven_beta(1, 5)).dump() == chain(5).dump());

    // nesting: each count's covers are a prefix-closed superset of the last
    // (from n = 2 on; the first element is the root and adds no cover)
    for (int n = 2; n <= 12; ++n) {
        const auto small = build_comb(CombSpec::uneven_beta(2, n - 1)).covers();
        auto big = build_comb(CombSpec::uneven_beta(2, n)).covers();
        for (const auto& c : small)
            CHECK(std::find(big.begin(), big.end(), c) != big.end());
        CHECK(big.size() == small.size() + 1);
    }
}

TEST_CASE("chain and antichain helpers") {
    CHECK(chain(3).dump() == "1<2\n2<3\n");
    CHECK(chain(0).size() == 0);
    CHECK(antichain(4).covers().empty());
    CHECK(antichain(4).size() == 4);
}

TEST_CASE("is_extension checks every cover and the length") {
    const Poset p = build_comb(CombSpec::even(Family::Beta, 2, 2));  // 1<2, 1<3, 3<4
    CHECK(is_extension(p, Permutation({1, 2, 3, 4})));
    CHECK(is_extension(p, Permutation({1, 3, 4, 2})));
    CHECK_FALSE(is_extension(p, Permutation({2, 1, 3, 4})));  // 2 before 1
    CHECK_FALSE(is_extension(p, Permutation({1, 2, 4, 3})));  // 4 before 3
    CHECK_THROWS_AS(is_extension(p, Permutation({1, 2, 3})), std::invalid_argument);
    CHECK(is_extension(antichain(0), Permutation{}));
}

TEST_CASE("hook length count on known shapes") {
    CHECK(knuth_count(build_comb(CombSpec::even(Family::Alpha, 3, 3))) == 280);
    CHECK(knuth_count(build_comb(CombSpec::even(Family::Beta, 3, 3))) == 280);
    CHECK(knuth_count(chain(6)) == 1);
    CHECK(knuth_count(antichain(4)) == 24);
    CHECK(knuth_count(antichain(0)) == 1);
    CHECK(knuth_count(Poset(4, {{1, 2}, {1, 3}, {1, 4}})) == 6);
    CHECK_THROWS_AS(knuth_count(Poset(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}})),
                    std::invalid_argument);  // not a forest
}

TEST_CASE("hook length count matches the comb closed form and the iterator") {
    for (int s = 1; s <= 10; ++s) {
        for (int t = 1; s * t <= 10; ++t) {
            for (Family f : {Family::Alpha, Family::Beta}) {
                const Poset p = build_comb(CombSpec::even(f, s, t));
                const BigCount expected = comb_extension_count(s, t);
                CAPTURE(s);
                CAPTURE(t);
                REQUIRE(knuth_count(p) == expected);
                REQUIRE(count_extensions(p) == expected);
            }
        }
    }
}
