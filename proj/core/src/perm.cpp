#include "combx/perm.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace combx {

namespace {

constexpr int kNone = std::numeric_limits<int>::min();
constexpr int kInf = std::numeric_limits<int>::max();

}  // namespace

Permutation::Permutation(std::vector<int> vals) : vals_(std::move(vals)) {
    const int n = static_cast<int>(vals_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int x : vals_) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)])
            throw std::invalid_argument("permutation values must rearrange 1..n");
        seen[static_cast<size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation length");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view digits) {
    if (digits.size() > 9)
        throw std::invalid_argument("digit-string patterns support length <= 9");
    std::vector<int> v;
    v.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("pattern must be a string of digits 1-9");
        v.push_back(c - '0');
    }
    return Permutation(std::move(v));
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vals_[i]);
    }
    return out;
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    for (const auto& p : patterns_)
        if (p.empty()) throw std::invalid_argument("patterns must have length >= 1");
    std::sort(patterns_.begin(), patterns_.end());
    if (std::adjacent_find(patterns_.begin(), patterns_.end()) != patterns_.end())
        throw std::invalid_argument("duplicate pattern in set");
}

PatternSet PatternSet::parse(std::string_view csv) {
    std::vector<Permutation> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty()) out.push_back(Permutation::parse(tok));
        if (comma == csv.size()) break;
        pos = comma + 1;
    }
    return PatternSet(std::move(out));
}

std::string PatternSet::str() const {
    std::string out;
    for (size_t i = 0; i < patterns_.size(); ++i) {
        if (i) out += ',';
        for (int x : patterns_[i].values()) out += static_cast<char>('0' + x);
    }
    return out;
}

namespace {

// Backtracking subsequence match: does v[from..] contain the remaining
// pattern letters w[k..], consistently with the values already chosen?
bool match_rest(const std::vector<int>& v, const std::vector<int>& w,
                std::vector<int>& chosen, size_t k, size_t from) {
    if (k == w.size()) return true;
    if (v.size() - from < w.size() - k) return false;
    for (size_t p = from; p + (w.size() - k) <= v.size(); ++p) {
        bool ok = true;
        for (size_t q = 0; q < k; ++q) {
            // v values must compare the way the pattern letters do
            if ((chosen[q] < v[p]) != (w[q] < w[k])) { ok = false; break; }
        }
        if (!ok) continue;
        chosen[k] = v[p];
        if (match_rest(v, w, chosen, k + 1, p + 1)) return true;
    }
    return false;
}

// is there an increasing subsequence of length 3?
bool scan_incr3(const std::vector<int>& v) {
    int min_seen = kInf;       // smallest value so far
    int min_asc_second = kInf; // smallest b over ascents a<b so far
    for (int x : v) {
        if (x > min_asc_second) return true;
        if (x > min_seen) min_asc_second = std::min(min_asc_second, x);
        min_seen = std::min(min_seen, x);
    }
    return false;
}

// stack scan for an occurrence of 132: values v_a < v_c < v_b at positions
// a < b < c. Right-to-left sweep; `two` is the largest value already known to
// have a bigger element in front of it, so any smaller value to its left is
// the missing '1'.
bool scan_132(const std::vector<int>& v) {
    std::vector<int> stack;  // decreasing; candidates for the '2'
    int two = kNone;
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i] < two) return true;
        while (!stack.empty() && stack.back() < v[i]) {
            two = std::max(two, stack.back());  // v[i] serves as the '3'
            stack.pop_back();
        }
        stack.push_back(v[i]);
    }
    return false;
}

std::vector<int> reversed(const std::vector<int>& v) {
    return {v.rbegin(), v.rend()};
}

std::vector<int> complemented(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = n + 1 - v[i];
    return out;
}

}  // namespace

bool contains_generic(const Permutation& v, const Permutation& w) {
    if (w.size() > v.size()) return false;
    if (w.empty()) return true;
    std::vector<int> chosen(static_cast<size_t>(w.size()));
    return match_rest(v.values(), w.values(), chosen, 0, 0);
}

bool contains_s3(const Permutation& v, const Permutation& w) {
    if (w.size() != 3) throw std::invalid_argument("contains_s3 requires a length-3 pattern");
    const auto& a = w.values();
    const auto& vs = v.values();
    if (a[0] == 1 && a[1] == 2) return scan_incr3(vs);                          // 123
    if (a[0] == 3 && a[1] == 2) return scan_incr3(complemented(vs));            // 321
    if (a[0] == 1 && a[1] == 3) return scan_132(vs);                            // 132
    if (a[0] == 2 && a[1] == 3) return scan_132(reversed(vs));                  // 231
    if (a[0] == 3 && a[1] == 1) return scan_132(complemented(vs));              // 312
    return scan_132(reversed(complemented(vs)));                                // 213
}

bool contains(const Permutation& v, const Permutation& w) {
    if (w.size() == 3) return contains_s3(v, w);
    return contains_generic(v, w);
}

bool contains_any(const Permutation& v, const PatternSet& ps) {
    for (const auto& w : ps.patterns())
        if (contains(v, w)) return true;
    return false;
}

PrefixTracker::PrefixTracker(PatternSet ps, int capacity) : ps_(std::move(ps)) {
    for (const auto& w : ps_.patterns()) {
        if (w.size() == 3) {
            const auto& a = w.values();
            int code;
            if (a[0] == 1 && a[1] == 2) code = 0;       // 123
            else if (a[0] == 1) code = 1;               // 132
            else if (a[0] == 2 && a[1] == 1) code = 2;  // 213
            else if (a[0] == 2) code = 3;               // 231
            else if (a[1] == 1) code = 4;               // 312
            else code = 5;                              // 321
            want_[code] = true;
        } else {
            generic_.push_back(&w);
        }
    }
    prefix_.reserve(static_cast<size_t>(capacity));
    min_before_.reserve(static_cast<size_t>(capacity));
    max_before_.reserve(static_cast<size_t>(capacity));
    history_.reserve(static_cast<size_t>(capacity));
    cur_ = {kInf, kNone, kInf, kNone, kInf, kNone};
}

bool PrefixTracker::creates_occurrence(int x) const {
    if (want_[0] && cur_.min_asc_second < x) return true;   // 123: x is the 3
    if (want_[5] && cur_.max_desc_second > x) return true;  // 321: x is the 1
    if (want_[2] && cur_.min_inv_top < x) return true;      // 213: x is the 3
    if (want_[3] && cur_.max_asc_first > x) return true;    // 231: x is the 1
    if (want_[1]) {                                         // 132: x is the 2, needs a < x < b
        for (size_t j = 0; j < prefix_.size(); ++j)
            if (prefix_[j] > x && min_before_[j] < x) return true;
    }
    if (want_[4]) {                                         // 312: x is the 2, needs b < x < a
        for (size_t j = 0; j < prefix_.size(); ++j)
            if (prefix_[j] < x && max_before_[j] > x) return true;
    }
    if (!generic_.empty()) {
        for (const Permutation* w : generic_) {
            const auto& ws = w->values();
            if (ws.size() > prefix_.size() + 1) continue;
            if (ws.size() == 1) return true;  // any element matches a length-1 pattern
            // pin the final pattern letter to x and match the head within the
            // prefix; an occurrence born from appending x must end at x
            std::vector<int> chosen(ws.size());
            struct Anchored {
                const std::vector<int>& v;
                const std::vector<int>& w_full;
                int x;
                bool run(std::vector<int>& chosen, size_t k, size_t from) const {
                    const size_t head_len = w_full.size() - 1;
                    if (k == head_len) return true;
                    if (v.size() - from < head_len - k) return false;
                    for (size_t p = from; p + (head_len - k) <= v.size(); ++p) {
                        bool ok = true;
                        for (size_t q = 0; q < k && ok; ++q)
                            if ((chosen[q] < v[p]) != (w_full[q] < w_full[k])) ok = false;
                        if (ok && (v[p] < x) != (w_full[k] < w_full[head_len])) ok = false;
                        if (!ok) continue;
                        chosen[k] = v[p];
                        if (run(chosen, k + 1, p + 1)) return true;
                    }
                    return false;
                }
            };
            Anchored a{prefix_, ws, x};
            if (a.run(chosen, 0, 0)) return true;
        }
    }
    return false;
}

void PrefixTracker::push(int x) {
    history_.push_back(cur_);
    min_before_.push_back(cur_.min_prefix);
    max_before_.push_back(cur_.max_prefix);
    if (!present_.empty()) {
        if (cur_.min_prefix < x) cur_.min_asc_second = std::min(cur_.min_asc_second, x);
        if (cur_.max_prefix > x) cur_.max_desc_second = std::max(cur_.max_desc_second, x);
        auto succ = present_.upper_bound(x);
        if (succ != present_.end()) cur_.min_inv_top = std::min(cur_.min_inv_top, *succ);
        auto pred = present_.lower_bound(x);
        if (pred != present_.begin()) cur_.max_asc_first = std::max(cur_.max_asc_first, *std::prev(pred));
    }
    cur_.min_prefix = std::min(cur_.min_prefix, x);
    cur_.max_prefix = std::max(cur_.max_prefix, x);
    prefix_.push_back(x);
    present_.insert(x);
}

void PrefixTracker::pop() {
    present_.erase(prefix_.back());
    prefix_.pop_back();
    min_before_.pop_back();
    max_before_.pop_back();
    cur_ = history_.back();
    history_.pop_back();
}

namespace {

void count_avoiders_rec(int n, PrefixTracker& tracker, std::vector<bool>& used, BigCount& acc) {
    if (tracker.depth() == n) {
        ++acc;
        return;
    }
    for (int x = 1; x <= n; ++x) {
        if (used[static_cast<size_t>(x)]) continue;
        if (tracker.creates_occurrence(x)) continue;
        used[static_cast<size_t>(x)] = true;
        tracker.push(x);
        count_avoiders_rec(n, tracker, used, acc);
        tracker.pop();
        used[static_cast<size_t>(x)] = false;
    }
}

}  // namespace

BigCount count_avoiders(int n, const PatternSet& ps) {
    if (n < 0) throw std::invalid_argument("count_avoiders: n must be >= 0");
    PrefixTracker tracker(ps, n);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    BigCount acc = 0;
    count_avoiders_rec(n, tracker, used, acc);
    return acc;
}

}  // namespace combx
