#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

struct NotATree : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EdgeNotInTree : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Free tree on vertices 0..n-1. Validated at construction (exactly n-1
/// edges, no self-loops or duplicates, connected) and immutable afterwards,
/// so values can be shared freely across threads.
class Tree {
  public:
    Tree(int order, std::vector<Edge> edges) : order_(order) {
        if (order < 1) throw NotATree("order must be positive");
        for (auto &e : edges) {
            if (e.first == e.second) throw NotATree("self-loop");
            if (e.first < 0 || e.second < 0 || e.first >= order || e.second >= order)
                throw NotATree("vertex out of range");
            e = make_edge(e.first, e.second);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw NotATree("duplicate edge");
        if (static_cast<int>(edges.size()) != order - 1)
            throw NotATree("a tree on " + std::to_string(order) + " vertices has " +
                           std::to_string(order - 1) + " edges");
        adj_.assign(order, {});
        for (auto [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        // n-1 edges + connected <=> tree
        std::vector<char> seen(order, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != order) throw NotATree("disconnected");
        edges_ = std::move(edges);
    }

    int order() const noexcept { return order_; }
    /// Edges normalized to u < v and sorted lexicographically.
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    /// Neighbor lists in ascending vertex order.
    const std::vector<int> &neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        Edge e = make_edge(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

  private:
    int order_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Degree multiset in ascending order.
using DegreeSequence = std::vector<int>;

inline DegreeSequence degree_sequence(const Tree &t) {
    DegreeSequence ds(t.order());
    for (int v = 0; v < t.order(); ++v) ds[v] = t.degree(v);
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<int> degree_class(const Tree &t, int i) {
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == i) out.push_back(v);
    return out;
}

inline std::vector<int> leaves(const Tree &t) { return degree_class(t, 1); }

/// Vertices of degree at least three.
inline std::vector<int> branches(const Tree &t) {
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 3) out.push_back(v);
    return out;
}

inline std::vector<int> bfs_distances(const Tree &t, int root) {
    std::vector<int> dist(t.order(), -1);
    std::queue<int> q;
    q.push(root);
    dist[root] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline int diameter(const Tree &t) {
    auto d0 = bfs_distances(t, 0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(t, far);
    return *std::max_element(d1.begin(), d1.end());
}

/// Vertex visit order of a BFS from root, neighbors in ascending order.
inline std::vector<int> bfs_order(const Tree &t, int root) {
    std::vector<int> order;
    order.reserve(t.order());
    std::vector<char> seen(t.order(), 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    return order;
}

/// The one or two middle vertices left by repeatedly stripping leaves.
inline std::vector<int> centers(const Tree &t) {
    int n = t.order();
    if (n <= 2) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        return all;
    }
    std::vector<int> deg(n);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(frontier.size());
        for (int v : frontier)
            for (int w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

/// Relabeling-invariant tree encoding; equal codes <=> isomorphic trees.
using CanonicalCode = std::string;

/// AHU encoding of the tree rooted at `root`: a leaf is "()", an inner
/// vertex wraps the sorted concatenation of its child codes.
inline CanonicalCode rooted_code(const Tree &t, int root) {
    auto rec = [&](auto &&self, int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : t.neighbors(v))
            if (w != parent) kids.push_back(self(self, w, v));
        std::sort(kids.begin(), kids.end());
        std::string out = "(";
        for (const auto &k : kids) out += k;
        out += ')';
        return out;
    };
    return rec(rec, root, -1);
}

/// Center-rooted canonical form. With two centers the code is the two
/// whole-tree rooted codes concatenated in sorted order, which keeps the
/// encoding invariant under relabeling.
inline CanonicalCode canonical_code(const Tree &t) {
    auto cs = centers(t);
    if (cs.size() == 1) return rooted_code(t, cs[0]);
    CanonicalCode a = rooted_code(t, cs[0]);
    CanonicalCode b = rooted_code(t, cs[1]);
    return a <= b ? a + b : b + a;
}

inline bool is_isomorphic(const Tree &a, const Tree &b) {
    if (a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

/// Applies a vertex permutation: vertex v becomes new_label[v].
inline Tree relabel(const Tree &t, const std::vector<int> &new_label) {
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (auto [u, v] : t.edges()) edges.push_back(make_edge(new_label[u], new_label[v]));
    return Tree(t.order(), std::move(edges));
}

} // namespace rainbow
