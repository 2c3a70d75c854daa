#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "combx/bigint.hpp"
#include "combx/perm.hpp"

namespace combx {

enum class Family { Alpha, Beta };

std::string family_name(Family f);          // "alpha" / "beta"
Family parse_family(std::string_view name); // accepts "alpha"/"beta", throws otherwise

// Shape of a comb. Even combs have s teeth of t elements each (the first
// element of a tooth sits on the spine). Uneven shapes carry a raw element
// count n and grow one element at a time following the family's labeling, so
// consecutive n values nest; when the count divides evenly they coincide with
// the Even shape.
struct EvenShape {
    int s = 1;  // teeth count >= 1
    int t = 1;  // tooth length >= 1
};

struct UnevenAlphaShape {
    int s = 1;  // teeth count >= 1
    int n = 0;  // total elements >= 0
};

struct UnevenBetaShape {
    int t = 1;  // tooth length >= 1
    int n = 0;  // total elements >= 0
};

struct CombSpec {
    Family family = Family::Alpha;
    std::variant<EvenShape, UnevenAlphaShape, UnevenBetaShape> shape;

    static CombSpec even(Family f, int s, int t);
    static CombSpec uneven_alpha(int s, int n);  // family is Alpha by construction
    static CombSpec uneven_beta(int t, int n);   // family is Beta by construction

    int element_count() const;
    std::string str() const;  // human-readable, e.g. "beta s=3 t=2"
};

// A finite poset on elements 1..n given by its cover relations. Covers are
// the full data; the order is their transitive closure. Construction rejects
// out-of-range labels, self-covers, duplicates, and cycles.
class Poset {
public:
    Poset() = default;
    Poset(int n, std::vector<std::pair<int, int>> covers);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // elements directly above / below a
    const std::vector<int>& upper_covers(int a) const { return up_[static_cast<size_t>(a)]; }
    const std::vector<int>& lower_covers(int a) const { return down_[static_cast<size_t>(a)]; }

    // every element has at most one lower cover (Hasse diagram is a forest
    // rooted at the minimal elements)
    bool is_forest() const;

    std::string dump() const;  // one cover per line, "a<b", sorted

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;  // sorted, unique
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
};

// Build the integer-labeled comb poset for a spec. Throws std::invalid_argument
// on out-of-range parameters.
Poset build_comb(const CombSpec& spec);

Poset chain(int n);      // 1 < 2 < ... < n
Poset antichain(int n);  // no relations

// Does v list the elements of p in an order consistent with every cover?
// Throws std::invalid_argument when v's length differs from p's size.
bool is_extension(const Poset& p, const Permutation& v);

// Hook length count of linear extensions, n!/prod(subtree sizes), valid for
// forest-shaped Hasse diagrams only; throws std::invalid_argument otherwise.
BigCount knuth_count(const Poset& p);

}  // namespace combx
