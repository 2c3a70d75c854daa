#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "combx/bigint.hpp"

namespace combx {

// A permutation of {1..n}, stored one-line. The empty permutation (n = 0) is
// legal; it is the root object of the generating trees and avoids everything.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> vals);  // throws std::invalid_argument unless vals rearranges 1..n

    static Permutation identity(int n);
    // "312" -> [3,1,2]; digit-string form is only defined for n <= 9
    static Permutation parse(std::string_view digits);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }
    int operator[](int i) const { return vals_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return vals_; }

    std::string str() const;  // space-separated values, "" for empty

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> vals_;
};

// An ordered set of patterns. Kept sorted (lexicographic on the value
// sequences) so that logically equal sets serialize identically, which cache
// keys and registry lookups rely on.
class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<Permutation> patterns);  // throws on duplicates or an empty pattern

    // "231,312" -> the two patterns; whitespace around commas tolerated
    static PatternSet parse(std::string_view csv);

    const std::vector<Permutation>& patterns() const { return patterns_; }
    bool empty() const { return patterns_.empty(); }
    size_t size() const { return patterns_.size(); }
    std::string str() const;  // canonical "231,312"

    bool operator==(const PatternSet&) const = default;
    auto operator<=>(const PatternSet&) const = default;

private:
    std::vector<Permutation> patterns_;
};

// Generic containment test: backtracking over pattern positions. Works for
// any pattern length; the reference implementation the fast paths are tested
// against.
bool contains_generic(const Permutation& v, const Permutation& w);

// Linear or near-linear scans for the six length-3 patterns. Throws if w is
// not of length 3.
bool contains_s3(const Permutation& v, const Permutation& w);

// Dispatching test: scan for length-3 patterns, backtracking otherwise.
bool contains(const Permutation& v, const Permutation& w);

bool contains_any(const Permutation& v, const PatternSet& ps);

// Number of permutations of {1..n} avoiding every pattern in ps. Brute-force
// oracle with prefix pruning; intended for small n only.
BigCount count_avoiders(int n, const PatternSet& ps);

// Incremental avoidance state for a growing prefix. Appending x to a clean
// prefix can only create occurrences that end at x (subsequence positions are
// increasing), so the per-pattern detectors below only look for occurrences
// whose final letter is the appended element. Length-3 patterns get O(1) or
// O(prefix) checks from running extrema; other lengths fall back to an
// anchored backtracking match.
class PrefixTracker {
public:
    PrefixTracker(PatternSet ps, int capacity);

    // would appending x to the current prefix complete a pattern occurrence?
    bool creates_occurrence(int x) const;
    void push(int x);  // precondition: creates_occurrence(x) was false or caller counts containers
    void pop();
    int depth() const { return static_cast<int>(prefix_.size()); }

private:
    struct Scalars {
        int min_prefix;       // smallest value in prefix
        int max_prefix;       // largest value in prefix
        int min_asc_second;   // min over ascents (a<b) of b      (completes 123)
        int max_desc_second;  // max over inversions (a>b) of b   (completes 321)
        int min_inv_top;      // min over inversions (a>b) of a   (completes 213)
        int max_asc_first;    // max over ascents (a<b) of a      (completes 231)
    };

    PatternSet ps_;
    bool want_[6] = {false, false, false, false, false, false};  // s3 pattern presence, indexed by code
    std::vector<const Permutation*> generic_;                    // non-length-3 patterns

    std::vector<int> prefix_;
    std::vector<int> min_before_;  // min of prefix_[0..i-1]
    std::vector<int> max_before_;  // max of prefix_[0..i-1]
    std::set<int> present_;
    Scalars cur_;
    std::vector<Scalars> history_;
};

}  // namespace combx
