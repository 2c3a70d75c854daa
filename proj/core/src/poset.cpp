#include "combx/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace combx {

std::string family_name(Family f) {
    return f == Family::Alpha ? "alpha" : "beta";
}

Family parse_family(std::string_view name) {
    if (name == "alpha") return Family::Alpha;
    if (name == "beta") return Family::Beta;
    throw std::invalid_argument("family must be 'alpha' or 'beta'");
}

CombSpec CombSpec::even(Family f, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("even comb needs s >= 1 and t >= 1");
    return CombSpec{f, EvenShape{s, t}};
}

CombSpec CombSpec::uneven_alpha(int s, int n) {
    if (s < 1) throw std::invalid_argument("uneven alpha comb needs s >= 1");
    if (n < 0) throw std::invalid_argument("element count must be >= 0");
    return CombSpec{Family::Alpha, UnevenAlphaShape{s, n}};
}

CombSpec CombSpec::uneven_beta(int t, int n) {
    if (t < 1) throw std::invalid_argument("uneven beta comb needs t >= 1");
    if (n < 0) throw std::invalid_argument("element count must be >= 0");
    return CombSpec{Family::Beta, UnevenBetaShape{t, n}};
}

int CombSpec::element_count() const {
    if (const auto* e = std::get_if<EvenShape>(&shape)) return e->s * e->t;
    if (const auto* a = std::get_if<UnevenAlphaShape>(&shape)) return a->n;
    return std::get<UnevenBetaShape>(shape).n;
}

std::string CombSpec::str() const {
    std::string out = family_name(family);
    if (const auto* e = std::get_if<EvenShape>(&shape)) {
        out += " s=" + std::to_string(e->s) + " t=" + std::to_string(e->t);
    } else if (const auto* a = std::get_if<UnevenAlphaShape>(&shape)) {
        out += " uneven s=" + std::to_string(a->s) + " n=" + std::to_string(a->n);
    } else {
        const auto& b = std::get<UnevenBetaShape>(shape);
        out += " uneven t=" + std::to_string(b.t) + " n=" + std::to_string(b.n);
    }
    return out;
}

Poset::Poset(int n, std::vector<std::pair<int, int>> covers)
    : n_(n), covers_(std::move(covers)) {
    if (n_ < 0) throw std::invalid_argument("poset size must be >= 0");
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
        throw std::invalid_argument("duplicate cover relation");
    up_.assign(static_cast<size_t>(n_) + 1, {});
    down_.assign(static_cast<size_t>(n_) + 1, {});
    for (auto [a, b] : covers_) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw std::invalid_argument("cover element out of range");
        if (a == b) throw std::invalid_argument("element cannot cover itself");
        up_[static_cast<size_t>(a)].push_back(b);
        down_[static_cast<size_t>(b)].push_back(a);
    }
    // Kahn's algorithm: every element must be reachable once all its lower
    // covers are peeled off, otherwise the relation has a cycle
    std::vector<int> indeg(static_cast<size_t>(n_) + 1, 0);
    for (auto [a, b] : covers_) { (void)a; ++indeg[static_cast<size_t>(b)]; }
    std::vector<int> queue;
    for (int v = 1; v <= n_; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
    size_t seen = 0;
    while (seen < queue.size()) {
        int v = queue[seen++];
        for (int w : up_[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0) queue.push_back(w);
    }
    if (static_cast<int>(seen) != n_)
        throw std::invalid_argument("cover relations contain a cycle");
}

bool Poset::is_forest() const {
    for (int v = 1; v <= n_; ++v)
        if (down_[static_cast<size_t>(v)].size() > 1) return false;
    return true;  // acyclicity was enforced at construction
}

std::string Poset::dump() const {
    std::string out;
    for (auto [a, b] : covers_) {
        out += std::to_string(a);
        out += '<';
        out += std::to_string(b);
        out += '\n';
    }
    return out;
}

Poset build_comb(const CombSpec& spec) {
    std::vector<std::pair<int, int>> covers;
    if (const auto* e = std::get_if<EvenShape>(&spec.shape)) {
        const int s = e->s, t = e->t;
        if (s < 1 || t < 1) throw std::invalid_argument("even comb needs s >= 1 and t >= 1");
        if (spec.family == Family::Alpha) {
            // element (sigma, tau) is (tau-1)s + sigma: spine is 1..s, teeth
            // climb in steps of s
            for (int i = 1; i < s; ++i) covers.emplace_back(i, i + 1);
            for (int k = 1; k <= s * (t - 1); ++k) covers.emplace_back(k, k + s);
        } else {
            // element (sigma, tau) is (sigma-1)t + tau: teeth are consecutive
            // runs, spine hops between tooth starts
            for (int c = 0; c < s; ++c) {
                for (int tau = 1; tau < t; ++tau)
                    covers.emplace_back(c * t + tau, c * t + tau + 1);
                if (c + 1 < s) covers.emplace_back(c * t + 1, (c + 1) * t + 1);
            }
        }
        return Poset(s * t, std::move(covers));
    }
    if (const auto* a = std::get_if<UnevenAlphaShape>(&spec.shape)) {
        if (spec.family != Family::Alpha)
            throw std::invalid_argument("uneven alpha shape requires the alpha family");
        const int s = a->s, n = a->n;
        if (s < 1 || n < 0) throw std::invalid_argument("uneven alpha comb needs s >= 1, n >= 0");
        // spine first, then teeth grow level by level: element k > s extends
        // the tooth of element k - s
        for (int i = 1; i < std::min(s, n); ++i) covers.emplace_back(i, i + 1);
        for (int k = s + 1; k <= n; ++k) covers.emplace_back(k - s, k);
        return Poset(n, std::move(covers));
    }
    const auto& b = std::get<UnevenBetaShape>(spec.shape);
    if (spec.family != Family::Beta)
        throw std::invalid_argument("uneven beta shape requires the beta family");
    const int t = b.t, n = b.n;
    if (t < 1 || n < 0) throw std::invalid_argument("uneven beta comb needs t >= 1, n >= 0");
    // teeth fill one at a time: a new tooth starts on the spine every t
    // elements, all other elements extend the current tooth
    for (int k = 2; k <= n; ++k) {
        if (k % t == 1 % t)  // k = c*t + 1 starts a tooth (any k when t = 1)
            covers.emplace_back(k - t, k);
        else
            covers.emplace_back(k - 1, k);
    }
    return Poset(n, std::move(covers));
}

Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return Poset(n, std::move(covers));
}

Poset antichain(int n) {
    return Poset(n, {});
}

bool is_extension(const Poset& p, const Permutation& v) {
    if (v.size() != p.size())
        throw std::invalid_argument("permutation length differs from poset size");
    std::vector<int> pos(static_cast<size_t>(p.size()) + 1, 0);
    for (int i = 0; i < v.size(); ++i) pos[static_cast<size_t>(v[i])] = i;
    for (auto [a, b] : p.covers())
        if (pos[static_cast<size_t>(a)] >= pos[static_cast<size_t>(b)]) return false;
    return true;
}

BigCount knuth_count(const Poset& p) {
    const int n = p.size();
    if (!p.is_forest())
        throw std::invalid_argument("hook length count needs a forest-shaped Hasse diagram");
    // subtree sizes by processing elements in reverse topological order;
    // with at most one lower cover, pushing each size onto its parent works
    std::vector<BigCount> sub(static_cast<size_t>(n) + 1, 1);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> pending(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        pending[static_cast<size_t>(v)] = static_cast<int>(p.upper_covers(v).size());
    for (int v = 1; v <= n; ++v)
        if (pending[static_cast<size_t>(v)] == 0) order.push_back(v);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : p.lower_covers(v))
            if (--pending[static_cast<size_t>(w)] == 0) order.push_back(w);
    }
    BigCount denom = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : p.upper_covers(v)) sub[static_cast<size_t>(v)] += sub[static_cast<size_t>(w)];
        denom *= sub[static_cast<size_t>(v)];
    }
    return factorial(n) / denom;
}

}  // namespace combx
