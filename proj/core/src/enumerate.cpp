#include "combx/enumerate.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace combx {

ExtensionIterator::ExtensionIterator(const Poset& p) : p_(&p) {
    const size_t n = static_cast<size_t>(p.size());
    indeg_.assign(n + 1, 0);
    used_.assign(n + 1, false);
    for (auto [a, b] : p.covers()) { (void)a; ++indeg_[static_cast<size_t>(b)]; }
    prefix_.reserve(n);
}

void ExtensionIterator::place(int x) {
    used_[static_cast<size_t>(x)] = true;
    prefix_.push_back(x);
    for (int b : p_->upper_covers(x)) --indeg_[static_cast<size_t>(b)];
}

int ExtensionIterator::unplace() {
    int x = prefix_.back();
    prefix_.pop_back();
    for (int b : p_->upper_covers(x)) ++indeg_[static_cast<size_t>(b)];
    used_[static_cast<size_t>(x)] = false;
    return x;
}

std::optional<Permutation> ExtensionIterator::next() {
    if (done_) return std::nullopt;
    const int n = p_->size();
    if (n == 0) {
        done_ = true;
        return Permutation();
    }
    if (yielded_) {
        // resume by stepping past the extension just produced
        candidate_ = unplace() + 1;
        yielded_ = false;
    }
    while (true) {
        int pick = 0;
        for (int x = candidate_; x <= n; ++x) {
            if (!used_[static_cast<size_t>(x)] && indeg_[static_cast<size_t>(x)] == 0) {
                pick = x;
                break;
            }
        }
        if (pick == 0) {
            if (prefix_.empty()) {
                done_ = true;
                return std::nullopt;
            }
            candidate_ = unplace() + 1;
            continue;
        }
        place(pick);
        candidate_ = 1;
        if (static_cast<int>(prefix_.size()) == n) {
            yielded_ = true;
            return Permutation(prefix_);
        }
    }
}

BigCount count_extensions(const Poset& p) {
    ExtensionIterator it(p);
    BigCount total = 0;
    while (it.next()) ++total;
    return total;
}

namespace {

// Shared backtracking core. `sink` sees each completed avoiding extension and
// returns false to stop the walk early (used by the limit in list_avoiding).
template <typename Sink>
bool walk_avoiding(const Poset& p, PrefixTracker& tracker, std::vector<int>& indeg,
                   std::vector<bool>& used, std::vector<int>& prefix, Sink&& sink) {
    const int n = p.size();
    if (static_cast<int>(prefix.size()) == n) return sink(prefix);
    for (int x = 1; x <= n; ++x) {
        if (used[static_cast<size_t>(x)] || indeg[static_cast<size_t>(x)] != 0) continue;
        if (tracker.creates_occurrence(x)) continue;
        used[static_cast<size_t>(x)] = true;
        prefix.push_back(x);
        for (int b : p.upper_covers(x)) --indeg[static_cast<size_t>(b)];
        tracker.push(x);
        bool keep_going = walk_avoiding(p, tracker, indeg, used, prefix, sink);
        tracker.pop();
        for (int b : p.upper_covers(x)) ++indeg[static_cast<size_t>(b)];
        prefix.pop_back();
        used[static_cast<size_t>(x)] = false;
        if (!keep_going) return false;
    }
    return true;
}

struct SearchState {
    std::vector<int> indeg;
    std::vector<bool> used;
    std::vector<int> prefix;
};

SearchState initial_state(const Poset& p) {
    SearchState st;
    const size_t n = static_cast<size_t>(p.size());
    st.indeg.assign(n + 1, 0);
    st.used.assign(n + 1, false);
    for (auto [a, b] : p.covers()) { (void)a; ++st.indeg[static_cast<size_t>(b)]; }
    st.prefix.reserve(n);
    return st;
}

BigCount count_avoiding_seq(const Poset& p, const PatternSet& ps,
                            const std::vector<int>& seed_prefix) {
    PrefixTracker tracker(ps, p.size());
    SearchState st = initial_state(p);
    for (int x : seed_prefix) {
        st.used[static_cast<size_t>(x)] = true;
        st.prefix.push_back(x);
        for (int b : p.upper_covers(x)) --st.indeg[static_cast<size_t>(b)];
        tracker.push(x);
    }
    BigCount total = 0;
    walk_avoiding(p, tracker, st.indeg, st.used, st.prefix, [&](const std::vector<int>&) {
        ++total;
        return true;
    });
    return total;
}

}  // namespace

BigCount count_avoiding(const Poset& p, const PatternSet& ps, int threads) {
    if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
    const int n = p.size();
    if (threads == 1 || n < 6) return count_avoiding_seq(p, ps, {});

    // Grow the prefix tree breadth-first until there are enough live branches
    // to spread across workers, then finish each branch independently. Combs
    // have a single minimal element, so splitting only at the first choice
    // would leave every worker but one idle.
    std::vector<std::vector<int>> branches{{}};
    BigCount completed = 0;
    const size_t want = static_cast<size_t>(threads) * 4;
    PrefixTracker tracker(ps, n);
    while (branches.size() < want) {
        std::vector<std::vector<int>> next_round;
        bool grew = false;
        for (const auto& prefix : branches) {
            if (static_cast<int>(prefix.size()) == n) {
                ++completed;  // a full extension found during splitting
                continue;
            }
            SearchState st = initial_state(p);
            while (tracker.depth() > 0) tracker.pop();
            for (int x : prefix) {
                st.used[static_cast<size_t>(x)] = true;
                for (int b : p.upper_covers(x)) --st.indeg[static_cast<size_t>(b)];
                tracker.push(x);
            }
            for (int x = 1; x <= n; ++x) {
                if (st.used[static_cast<size_t>(x)] || st.indeg[static_cast<size_t>(x)] != 0) continue;
                if (tracker.creates_occurrence(x)) continue;
                auto child = prefix;
                child.push_back(x);
                next_round.push_back(std::move(child));
                grew = true;
            }
        }
        branches = std::move(next_round);
        if (!grew || branches.empty()) break;
    }

    std::vector<std::future<BigCount>> futures;
    const size_t workers = std::min<size_t>(static_cast<size_t>(threads), branches.size());
    for (size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            BigCount sub = 0;
            for (size_t i = w; i < branches.size(); i += workers)
                sub += count_avoiding_seq(p, ps, branches[i]);
            return sub;
        }));
    }
    BigCount total = completed;
    for (auto& f : futures) total += f.get();
    return total;
}

std::vector<Permutation> list_avoiding(const Poset& p, const PatternSet& ps,
                                       std::optional<long long> limit) {
    std::vector<Permutation> out;
    if (limit && *limit <= 0) return out;
    PrefixTracker tracker(ps, p.size());
    SearchState st = initial_state(p);
    walk_avoiding(p, tracker, st.indeg, st.used, st.prefix, [&](const std::vector<int>& v) {
        out.emplace_back(v);
        return !limit || static_cast<long long>(out.size()) < *limit;
    });
    return out;
}

}  // namespace combx
