#pragma once

#include <optional>
#include <vector>

#include "combx/bigint.hpp"
#include "combx/perm.hpp"
#include "combx/poset.hpp"

namespace combx {

// Pull-based stream over the linear extensions of a poset, in lexicographic
// order of the produced value sequences. Backtracking over the frontier of
// elements whose lower covers are all placed; nothing is materialized beyond
// the current prefix.
class ExtensionIterator {
public:
    // holds a reference: the poset must outlive the iterator, so temporaries
    // are rejected outright
    explicit ExtensionIterator(const Poset& p);
    explicit ExtensionIterator(Poset&&) = delete;

    // next extension, or nullopt once the stream is exhausted
    std::optional<Permutation> next();

private:
    int unplace();          // undo the deepest placement, return its value
    void place(int x);

    const Poset* p_;
    std::vector<int> indeg_;  // unplaced lower covers per element
    std::vector<bool> used_;
    std::vector<int> prefix_;
    int candidate_ = 1;       // smallest value worth trying at the current depth
    bool yielded_ = false;    // last call returned a full extension
    bool done_ = false;
};

// Number of linear extensions computed by walking the stream; agrees with
// knuth_count on forests and also covers non-forest posets.
BigCount count_extensions(const Poset& p);

// Exact number of linear extensions avoiding every pattern in ps. Prunes any
// prefix that already contains a pattern (appending values can only add
// occurrences, never remove them). With threads > 1 the prefix tree is split
// into independent branches processed on worker threads.
BigCount count_avoiding(const Poset& p, const PatternSet& ps, int threads = 1);

// The avoiding extensions themselves, lexicographic, truncated at limit.
std::vector<Permutation> list_avoiding(const Poset& p, const PatternSet& ps,
                                       std::optional<long long> limit = std::nullopt);

}  // namespace combx
