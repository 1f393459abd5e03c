#pragma once

#include <chrono>

#include "rainbow/coloring.hpp"
#include "rainbow/families.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

struct BadColorBudget : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadEdgeOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadParam : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WitnessKind { lemma1, star, fk, bstar };

inline const char *witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::lemma1: return "lemma1";
    case WitnessKind::star: return "star";
    case WitnessKind::fk: return "fk";
    case WitnessKind::bstar: return "bstar";
    }
    return "?";
}

namespace detail {

// Hosts are laid out as X then Y: X = 0..x_order-1 carries the planted copy,
// Y holds the matched pairs (y_j, z_j) for j = first_pair..t, interleaved in
// increasing j. All helpers below fill edges not explicitly colored with 1.
struct HostBuilder {
    int n;
    std::vector<int> colors;

    HostBuilder(int x_order, int first_pair, int t)
        : n(x_order + 2 * (t - first_pair + 1)),
          colors(ColoredComplete::pair_count(n), 1), x_order_(x_order),
          first_pair_(first_pair) {
        for (int j = first_pair; j <= t; ++j) set(y_of(j), z_of(j), j);
    }

    int y_of(int j) const { return x_order_ + 2 * (j - first_pair_); }
    int z_of(int j) const { return y_of(j) + 1; }

    void set(int u, int v, int c) { colors[ColoredComplete::pair_index(n, u, v)] = c; }

    ColoredComplete build() && { return ColoredComplete(n, std::move(colors)); }

  private:
    int x_order_;
    int first_pair_;
};

} // namespace detail

/// Host on X ∪ Y with |X| = |T2| and |Y| = 2(t - |T2| + 1): a copy of T2 is
/// planted on X (vertex i of X is the i-th vertex of a breadth-first order
/// of T2 from vertex 0) with its i-th edge per `edge_order` colored i; the Y
/// pair for color j is an isolated matching edge; every other edge gets
/// color 1. The first entry of edge_order designates the edge whose color 1
/// also floods the rest of the host — callers choose it; nothing about its
/// role is validated here.
inline ColoredComplete lemma1_witness(const Tree &t2, const std::vector<Edge> &edge_order,
                                      int t) {
    const int n = t2.order();
    if (n < 2) throw BadParam("lemma1_witness: tree must have at least one edge");
    if (t < n) throw BadColorBudget("lemma1_witness: need t >= |T2|");
    std::vector<Edge> sorted;
    sorted.reserve(edge_order.size());
    for (Edge e : edge_order) sorted.push_back(make_edge(e.first, e.second));
    std::vector<Edge> given = sorted;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != t2.edges())
        throw BadEdgeOrder("lemma1_witness: edge order must be a permutation of E(T2)");

    std::vector<int> pos(n);
    {
        auto order = bfs_order(t2, 0);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
    }
    detail::HostBuilder host(n, n, t);
    for (int i = 0; i < n - 1; ++i)
        host.set(pos[given[i].first], pos[given[i].second], i + 1);
    return std::move(host).build();
}

/// Picks an edge ordering for lemma1_witness whose first edge leaves two
/// components of at least two vertices each, when the tree has one
/// (equivalently diam >= 3); remaining edges follow in sorted order.
inline std::vector<Edge> component_balanced_edge_order(const Tree &t2) {
    std::vector<Edge> order = t2.edges();
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [u, v] = order[i];
        if (t2.degree(u) >= 2 && t2.degree(v) >= 2) {
            std::swap(order[0], order[i]);
            break;
        }
    }
    return order;
}

/// Host {v, v_1..v_t} with spoke v-v_i colored i and everything else
/// colored 1; vertex 0 plays v.
inline ColoredComplete star_witness(int t) {
    if (t < 3) throw BadColorBudget("star_witness: need t >= 3");
    const int n = t + 1;
    std::vector<int> colors(ColoredComplete::pair_count(n), 1);
    for (int i = 1; i <= t; ++i) colors[ColoredComplete::pair_index(n, 0, i)] = i;
    return ColoredComplete(n, std::move(colors));
}

/// Host on X ∪ Y, |X| = 3k+1, |Y| = 2(t-3k), with a planted F_k on X (the
/// family labeling: center 0, middles 1..k, leaves of middle i at k+2i-1 and
/// k+2i). Tree edges take colors 1..3k with f1 = (0,1) and f2 = (0,2) first;
/// the two chords from the center to the first middle's leaves are colored
/// 2; Y pairs take 3k+1..t; the rest is color 1.
inline ColoredComplete fk_witness(int k, int t) {
    if (k < 3) throw BadParam("fk_witness: need k >= 3");
    if (t < 3 * k + 1) throw BadColorBudget("fk_witness: need t >= 3k+1");
    detail::HostBuilder host(3 * k + 1, 3 * k + 1, t);
    int color = 0;
    for (int i = 1; i <= 2; ++i) host.set(0, i, ++color);
    for (int i = 3; i <= k; ++i) host.set(0, i, ++color);
    for (int i = 1; i <= k; ++i) {
        host.set(i, k + 2 * i - 1, ++color);
        host.set(i, k + 2 * i, ++color);
    }
    host.set(0, k + 1, 2);
    host.set(0, k + 2, 2);
    return std::move(host).build();
}

/// Host on X ∪ Y, |X| = 2k+1, |Y| = 2(t-2k), with a planted B*_{k-1,k-1} on
/// X (family labeling: middle 0, leaf-carrying centers 1 and 2). Tree edges
/// take colors 1..2k with f1 = (1,0) and f2 = (0,2) first; every non-copy
/// edge at vertex 2 except the one to vertex 1 is colored 2; Y pairs take
/// 2k+1..t; the rest is color 1.
inline ColoredComplete bstar_witness(int k, int t) {
    if (k < 3) throw BadParam("bstar_witness: need k >= 3");
    if (t < 2 * k + 2) throw BadColorBudget("bstar_witness: need t >= 2k+2");
    detail::HostBuilder host(2 * k + 1, 2 * k + 1, t);
    int color = 0;
    host.set(1, 0, ++color);
    host.set(0, 2, ++color);
    for (int i = 3; i <= k + 1; ++i) host.set(1, i, ++color);
    for (int i = k + 2; i <= 2 * k; ++i) host.set(2, i, ++color);
    for (int x = 3; x <= k + 1; ++x) host.set(2, x, 2);
    for (int x = 2 * k + 1; x < host.n; ++x) host.set(2, x, 2);
    return std::move(host).build();
}

/// Outcome of checking a witness coloring: exactly t colors used, a rainbow
/// copy of the target tree present, and no rainbow copy of the forbidden
/// pattern. All three true means the coloring shows that rainbow-T1-freeness
/// at t colors does not force rainbow-T2-freeness.
struct VerificationReport {
    bool color_count_ok = false;
    bool contains_target = false;
    bool free_of_pattern = false;
    std::optional<RainbowEmbedding> embedding;
    std::chrono::milliseconds elapsed{0};
    std::uint64_t nodes_searched = 0;

    bool ok() const { return color_count_ok && contains_target && free_of_pattern; }
};

inline VerificationReport verify_nonle(const ColoredComplete &coloring, const Tree &t1,
                                       const Tree &t2, int t,
                                       std::uint64_t node_budget = kDefaultNodeBudget) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    SearchStats stats;
    report.color_count_ok = coloring.num_colors() == t;
    report.embedding = find_rainbow(coloring, t2, &stats, node_budget);
    report.contains_target = report.embedding.has_value();
    report.free_of_pattern = is_rainbow_free(coloring, t1, &stats, node_budget);
    report.nodes_searched = stats.nodes;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace rainbow
