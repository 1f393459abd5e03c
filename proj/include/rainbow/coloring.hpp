#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>

#include "rainbow/rng.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_io.hpp"

namespace rainbow {

struct IncompleteAssignment : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadColor : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooManyColors : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PatternTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complete graph on vertices 0..n-1 with one positive color per unordered
/// pair, stored as a flat triangular array. Immutable; `recolored` returns a
/// modified copy.
class ColoredComplete {
  public:
    static std::size_t pair_count(int n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }
    static std::size_t pair_index(int n, int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
    }

    ColoredComplete(int n, std::vector<int> colors) : n_(n), colors_(std::move(colors)) {
        if (n < 1) throw IncompleteAssignment("order must be positive");
        if (colors_.size() != pair_count(n))
            throw IncompleteAssignment("expected one color per vertex pair");
        for (int c : colors_)
            if (c < 1) throw BadColor("colors must be positive integers");
    }

    int order() const noexcept { return n_; }
    int color(int u, int v) const { return colors_[pair_index(n_, u, v)]; }
    const std::vector<int> &colors() const noexcept { return colors_; }

    std::vector<int> palette() const {
        std::vector<int> p = colors_;
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        return p;
    }
    int num_colors() const { return static_cast<int>(palette().size()); }

    ColoredComplete recolored(int u, int v, int c) const {
        std::vector<int> next = colors_;
        next[pair_index(n_, u, v)] = c;
        return ColoredComplete(n_, std::move(next));
    }

  private:
    int n_;
    std::vector<int> colors_;
};

/// Builds a coloring from explicit (u, v, color) triples; every pair must
/// appear exactly once.
inline ColoredComplete make_coloring(int n, const std::vector<std::tuple<int, int, int>> &triples) {
    if (n < 1) throw IncompleteAssignment("order must be positive");
    std::vector<int> colors(ColoredComplete::pair_count(n), 0);
    for (auto [u, v, c] : triples) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw IncompleteAssignment("bad vertex pair");
        auto idx = ColoredComplete::pair_index(n, u, v);
        if (colors[idx] != 0) throw IncompleteAssignment("pair assigned twice");
        if (c < 1) throw BadColor("colors must be positive integers");
        colors[idx] = c;
    }
    for (int c : colors)
        if (c == 0) throw IncompleteAssignment("assignment does not cover every pair");
    return ColoredComplete(n, std::move(colors));
}

/// Injective placement of a pattern tree whose mapped edges carry pairwise
/// distinct colors. map[p] is the host vertex of pattern vertex p.
struct RainbowEmbedding {
    Tree pattern;
    std::vector<int> map;

    bool valid_in(const ColoredComplete &host) const {
        if (static_cast<int>(map.size()) != pattern.order()) return false;
        std::vector<char> used(host.order(), 0);
        for (int h : map) {
            if (h < 0 || h >= host.order() || used[h]) return false;
            used[h] = 1;
        }
        std::vector<int> seen;
        for (auto [u, v] : pattern.edges()) {
            int c = host.color(map[u], map[v]);
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
            seen.push_back(c);
        }
        return true;
    }
};

struct SearchStats {
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ull;

namespace detail {

struct PatternOrder {
    std::vector<int> visit;  // pattern vertices in placement order
    std::vector<int> parent; // parent[v] in the rooted pattern, -1 at the root
};

// Root at a maximum-degree vertex, then DFS with children in decreasing
// subtree size. Star-heavy patterns bind their high-degree hub first, which
// is what prunes fastest on the colorings built here.
inline PatternOrder plan_pattern_order(const Tree &pattern) {
    const int h = pattern.order();
    int root = 0;
    for (int v = 1; v < h; ++v)
        if (pattern.degree(v) > pattern.degree(root)) root = v;
    std::vector<int> parent(h, -1), size(h, 1), preorder;
    {
        std::vector<std::pair<int, int>> stack{{root, -1}};
        while (!stack.empty()) {
            auto [v, p] = stack.back();
            stack.pop_back();
            parent[v] = p;
            preorder.push_back(v);
            for (int w : pattern.neighbors(v))
                if (w != p) stack.push_back({w, v});
        }
        // children precede parents in reversed preorder, so sizes are final
        // when added up
        for (auto it = preorder.rbegin(); it != preorder.rend(); ++it)
            if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    }
    PatternOrder plan;
    plan.parent = parent;
    plan.visit.reserve(h);
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        plan.visit.push_back(v);
        std::vector<int> kids;
        for (int w : pattern.neighbors(v))
            if (w != parent[v]) kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            if (size[a] != size[b]) return size[a] > size[b];
            return a < b;
        });
        // reversed so the largest subtree is visited first
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return plan;
}

} // namespace detail

/// Exact backtracking search for a rainbow copy of the pattern tree.
/// Pattern vertices are placed in a connected order (highest-degree root
/// first); each placement adds exactly one pattern edge, rejected as soon as
/// its color repeats. Exceeding the node budget raises SearchBudgetExceeded
/// rather than returning a wrong answer.
inline std::optional<RainbowEmbedding>
find_rainbow(const ColoredComplete &host, const Tree &pattern, SearchStats *stats = nullptr,
             std::uint64_t node_budget = kDefaultNodeBudget) {
    const int n = host.order();
    const int h = pattern.order();
    if (h > n) throw PatternTooLarge("pattern has more vertices than the host");
    detail::PatternOrder plan = detail::plan_pattern_order(pattern);
    std::vector<int> assign(h, -1);
    std::vector<char> used_host(n, 0);
    std::vector<int> used_colors;
    used_colors.reserve(h);
    std::uint64_t nodes = 0;
    auto rec = [&](auto &&self, int pos) -> bool {
        if (pos == h) return true;
        const int pv = plan.visit[pos];
        const int par = plan.parent[pv];
        for (int hv = 0; hv < n; ++hv) {
            if (used_host[hv]) continue;
            int c = 0;
            if (par >= 0) {
                c = host.color(assign[par], hv);
                if (std::find(used_colors.begin(), used_colors.end(), c) != used_colors.end())
                    continue;
            }
            if (++nodes > node_budget) {
                if (stats) stats->nodes += nodes;
                throw SearchBudgetExceeded("rainbow search exceeded its node budget");
            }
            used_host[hv] = 1;
            assign[pv] = hv;
            if (par >= 0) used_colors.push_back(c);
            if (self(self, pos + 1)) return true;
            if (par >= 0) used_colors.pop_back();
            used_host[hv] = 0;
        }
        return false;
    };
    bool found = rec(rec, 0);
    if (stats) stats->nodes += nodes;
    if (!found) return std::nullopt;
    RainbowEmbedding embedding{pattern, std::move(assign)};
    if (!embedding.valid_in(host))
        throw std::logic_error("rainbow embedding failed revalidation");
    return embedding;
}

inline bool is_rainbow_free(const ColoredComplete &host, const Tree &pattern,
                            SearchStats *stats = nullptr,
                            std::uint64_t node_budget = kDefaultNodeBudget) {
    return !find_rainbow(host, pattern, stats, node_budget).has_value();
}

/// Seeded coloring surjective onto exactly t colors: the first t pairs of a
/// shuffled pair order receive colors 1..t, the rest draw uniformly from
/// 1..t. Deterministic per seed on every platform.
inline ColoredComplete random_coloring(int n, int t, std::uint64_t seed) {
    const std::size_t pairs = ColoredComplete::pair_count(n);
    if (t < 1 || static_cast<std::size_t>(t) > pairs)
        throw TooManyColors("color count must be in [1, C(n,2)]");
    DetRng rng(seed);
    std::vector<std::size_t> order(pairs);
    for (std::size_t i = 0; i < pairs; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<int> colors(pairs, 0);
    for (std::size_t i = 0; i < pairs; ++i)
        colors[order[i]] = i < static_cast<std::size_t>(t)
                               ? static_cast<int>(i) + 1
                               : static_cast<int>(rng.below(t)) + 1;
    return ColoredComplete(n, std::move(colors));
}

/// Coloring text format: line 1 is `n t`, followed by C(n,2) lines `u v c`
/// with u < v, every pair exactly once, 1 <= c <= t and all of 1..t used.
inline ColoredComplete read_coloring(std::istream &in) {
    int n = 0, t = 0;
    if (!(in >> n >> t)) throw ParseError("coloring file: missing header `n t`");
    if (n < 1) throw ParseError("coloring file: order must be positive");
    const std::size_t pairs = ColoredComplete::pair_count(n);
    std::vector<std::tuple<int, int, int>> triples;
    triples.reserve(pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        int u = 0, v = 0, c = 0;
        if (!(in >> u >> v >> c)) throw ParseError("coloring file: expected C(n,2) entries");
        if (!(0 <= u && u < v && v < n))
            throw ParseError("coloring file: pair must satisfy 0 <= u < v < n");
        if (c < 1 || c > t) throw BadColor("coloring file: color out of [1, t]");
        triples.emplace_back(u, v, c);
    }
    ColoredComplete coloring = make_coloring(n, triples);
    if (coloring.num_colors() != t) throw BadColor("coloring file: not all of 1..t used");
    return coloring;
}

inline void write_coloring(std::ostream &out, const ColoredComplete &coloring) {
    const int n = coloring.order();
    const int t = coloring.num_colors();
    auto p = coloring.palette();
    if (p.front() != 1 || p.back() != t)
        throw BadColor("write_coloring: palette must be exactly 1..t");
    out << n << ' ' << t << '\n';
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out << u << ' ' << v << ' ' << coloring.color(u, v) << '\n';
}

inline ColoredComplete read_coloring_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coloring file: " + path);
    return read_coloring(in);
}

inline void write_coloring_file(const std::string &path, const ColoredComplete &coloring) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_coloring(out, coloring);
}

} // namespace rainbow
