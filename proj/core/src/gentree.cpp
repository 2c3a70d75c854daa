#include "combx/gentree.hpp"

#include <algorithm>
#include <stdexcept>

#include "combx/poset.hpp"

namespace combx {

BigCount LevelProfile::total() const {
    BigCount sum = 0;
    for (const auto& [label, count] : counts) sum += count;
    return sum;
}

std::string LevelProfile::str() const {
    std::string out = std::to_string(level) + " " + total().str() + " {";
    bool first = true;
    for (const auto& [label, count] : counts) {
        if (!first) out += ',';
        out += std::to_string(label) + ":" + count.str();
        first = false;
    }
    out += '}';
    return out;
}

std::vector<int> insertion_positions(const Permutation& v, int t) {
    if (t < 1) throw std::invalid_argument("tooth length must be >= 1");
    const int n = v.size();
    if (!is_extension(build_comb(CombSpec::uneven_beta(t, n)), v))
        throw std::invalid_argument("not an extension of the matching beta comb");
    if (contains(v, Permutation::parse("312")))
        throw std::invalid_argument("permutation already contains 312");
    if (n == 0) return {0};

    // start of the maximal strictly decreasing suffix: inserting the new
    // maximum any earlier would leave an ascent after it, completing 312
    int desc = n - 1;
    while (desc > 0 && v[desc - 1] > v[desc]) --desc;
    // the comb makes n+1 cover the last spine element when it starts a new
    // tooth, and its tooth neighbor n otherwise; it must land after that
    const int pred = (n % t == 0) ? n + 1 - t : n;
    int pred_pos = 0;
    while (v[pred_pos] != pred) ++pred_pos;

    std::vector<int> gaps;
    for (int g = std::max(desc, pred_pos + 1); g <= n; ++g) gaps.push_back(g);
    return gaps;
}

std::vector<LevelProfile> succession_profiles(int t, int max_level) {
    if (t < 1 || max_level < 0) throw std::invalid_argument("need t >= 1, max_level >= 0");
    std::vector<LevelProfile> out;
    out.reserve(static_cast<size_t>(max_level) + 1);
    LevelProfile cur;
    cur.level = 0;
    cur.counts[1] = 1;
    out.push_back(cur);
    for (int level = 1; level <= max_level; ++level) {
        LevelProfile next;
        next.level = level;
        const bool spinal = level % t == 0;  // element level+1 starts a new tooth
        for (const auto& [m, count] : out.back().counts) {
            if (spinal) {
                for (int child = 2; child <= m + 1; ++child) next.counts[child] += count;
            } else {
                for (int child = 1; child <= m; ++child) next.counts[child] += count;
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

namespace {

// paths from the origin to each point of column x with t*y <= x, never
// crossing y = x/t; columns computed left to right
std::vector<std::vector<BigCount>> path_grid(int t, int max_x, int max_y) {
    std::vector<std::vector<BigCount>> grid(static_cast<size_t>(max_x) + 1);
    for (int x = 0; x <= max_x; ++x) {
        const int top = std::min(max_y, x / t);
        auto& col = grid[static_cast<size_t>(x)];
        col.assign(static_cast<size_t>(top) + 1, 0);
        for (int y = 0; y <= top; ++y) {
            if (x == 0 && y == 0) {
                col[0] = 1;
                continue;
            }
            if (x > 0 && y <= (x - 1) / t)
                col[static_cast<size_t>(y)] += grid[static_cast<size_t>(x - 1)][static_cast<size_t>(y)];
            if (y > 0)
                col[static_cast<size_t>(y)] += col[static_cast<size_t>(y - 1)];
        }
    }
    return grid;
}

}  // namespace

std::vector<LevelProfile> lattice_profiles(int t, int max_level) {
    if (t < 1 || max_level < 0) throw std::invalid_argument("need t >= 1, max_level >= 0");
    std::vector<LevelProfile> out;
    out.reserve(static_cast<size_t>(max_level) + 1);
    LevelProfile root;
    root.level = 0;
    root.counts[1] = 1;  // the empty root's one child enters the grid at (0,0)
    out.push_back(root);
    if (max_level == 0) return out;
    const int max_x = max_level - 1;
    auto grid = path_grid(t, max_x, max_x / t + 1);
    for (int level = 1; level <= max_level; ++level) {
        LevelProfile prof;
        prof.level = level;
        const int x = level - 1;
        const int top = x / t;
        for (int y = 0; y <= top; ++y) {
            const BigCount& ways = grid[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (ways == 0) continue;
            // child count of (x,y): across to x+1, then up to any y' in
            // [y, (x+1)/t]
            prof.counts[(level / t) - y + 1] += ways;
        }
        out.push_back(std::move(prof));
    }
    return out;
}

BigCount count_lattice_paths(int t, int s) {
    if (t < 1 || s < 0) throw std::invalid_argument("need t >= 1, s >= 0");
    auto grid = path_grid(t, t * s, s);
    return grid[static_cast<size_t>(t) * static_cast<size_t>(s)][static_cast<size_t>(s)];
}

std::vector<std::vector<Permutation>> insertion_tree_levels(int t, int max_level) {
    if (t < 1 || max_level < 0) throw std::invalid_argument("need t >= 1, max_level >= 0");
    std::vector<std::vector<Permutation>> levels;
    levels.reserve(static_cast<size_t>(max_level) + 1);
    levels.push_back({Permutation()});
    for (int level = 1; level <= max_level; ++level) {
        std::vector<Permutation> next;
        for (const auto& v : levels.back()) {
            auto vals = v.values();
            for (int g : insertion_positions(v, t)) {
                auto child = vals;
                child.insert(child.begin() + g, level);
                next.emplace_back(std::move(child));
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

}  // namespace combx
