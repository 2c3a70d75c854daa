#pragma once

#include <map>
#include <string>
#include <vector>

#include "combx/bigint.hpp"
#include "combx/perm.hpp"

namespace combx {

// Label census of one generating-tree level: label -> number of nodes carrying
// it. A node's label is its child count, so the census at level k determines
// the census at level k+1 without touching the nodes themselves.
struct LevelProfile {
    int level = 0;
    std::map<int, BigCount> counts;

    BigCount total() const;
    std::string str() const;  // "level total {label:count,...}", labels ascending

    bool operator==(const LevelProfile&) const = default;
};

// Gaps (0..|v|) where |v|+1 can be inserted into v so that the result is again
// a 312-avoiding extension of the next one-larger beta comb with tooth length
// t: after the start of the trailing decreasing run (a later ascent would
// complete 312 under the new maximum) and after the new element's required
// predecessor in the comb. Throws std::invalid_argument when v itself is not
// a 312-avoiding extension.
std::vector<int> insertion_positions(const Permutation& v, int t);

// Level censuses 0..max_level from the pure label dynamics: the root has
// label 1; a label-m node at level k spawns labels {2..m+1} when k+1 is a
// multiple of t (the next element lands on the spine) and {1..m} otherwise.
// For t >= 2 the total at level n counts the 312-avoiding extensions of the
// n-element beta comb.
std::vector<LevelProfile> succession_profiles(int t, int max_level);

// Level censuses of the lattice-path tree: nodes at level k >= 1 are the legal
// grid points (k-1, y) with t*y <= k-1, weighted by the number of monotone
// paths from the origin that stay on or below y = x/t; a node's children are
// one step across then any number of legal steps up. Level by level this
// matches succession_profiles.
std::vector<LevelProfile> lattice_profiles(int t, int max_level);

// Monotone lattice paths from (0,0) to (t*s+1, s) that never cross y = x/t
// (the final step is forced across); equals fuss_catalan(s, t).
BigCount count_lattice_paths(int t, int s);

// The literal tree of permutations grown by insertion_positions, level by
// level from the empty root. Small scale only; used to pin the label DP to
// the real objects.
std::vector<std::vector<Permutation>> insertion_tree_levels(int t, int max_level);

}  // namespace combx
