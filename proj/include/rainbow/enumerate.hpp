#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>

#include "rainbow/tree.hpp"

namespace rainbow {

/// One representative per isomorphism class of trees of a fixed order.
/// codes[i] is the canonical code of representatives[i]; the list is sorted
/// by code, so output order is deterministic across runs and platforms.
struct TreeCatalog {
    int order = 0;
    std::vector<Tree> representatives;
    std::vector<CanonicalCode> codes;
};

/// Canonical-extension generation: grow every representative of order m by
/// one pendant vertex and keep a result iff its canonical code is new.
/// Every class of order m+1 arises this way, since deleting any leaf of a
/// tree of order m+1 leaves a tree of order m.
inline TreeCatalog enumerate_trees(int n) {
    if (n < 1 || n > 16) throw OrderOutOfRange("enumerate_trees: order must be in [1,16]");
    std::vector<Tree> level;
    level.emplace_back(1, std::vector<Edge>{});
    for (int m = 2; m <= n; ++m) {
        std::map<CanonicalCode, Tree> grown;
        for (const Tree &t : level)
            for (int v = 0; v < m - 1; ++v) {
                std::vector<Edge> edges = t.edges();
                edges.emplace_back(v, m - 1);
                Tree candidate(m, std::move(edges));
                CanonicalCode code = canonical_code(candidate);
                grown.try_emplace(std::move(code), std::move(candidate));
            }
        level.clear();
        for (auto &entry : grown) level.push_back(std::move(entry.second));
    }
    TreeCatalog catalog;
    catalog.order = n;
    catalog.representatives = std::move(level);
    catalog.codes.reserve(catalog.representatives.size());
    for (const Tree &t : catalog.representatives) catalog.codes.push_back(canonical_code(t));
    return catalog;
}

namespace detail {

// Standard decode: repeatedly join the smallest remaining leaf to the next
// sequence entry, then connect the last two remaining vertices.
inline std::vector<Edge> decode_prufer(int n, const std::vector<int> &seq) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int s : seq) {
        int leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        edges.push_back(make_edge(leaf, s));
        deg[leaf] = 0;
        --deg[s];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
            if (a < 0) a = v;
            else edges.push_back(make_edge(a, v));
        }
    return edges;
}

} // namespace detail

/// Counts isomorphism classes of order n by walking all n^(n-2) labeled
/// trees through their Prüfer sequences and deduplicating canonical codes.
/// Deliberately a second, independent code path from enumerate_trees; the
/// cost is exponential, hence the small order cap.
inline std::int64_t prufer_count_oracle(int n) {
    if (n < 2 || n > 9) throw OrderOutOfRange("prufer_count_oracle: order must be in [2,9]");
    std::unordered_set<CanonicalCode> distinct;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        Tree t(n, detail::decode_prufer(n, seq));
        distinct.insert(canonical_code(t));
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return static_cast<std::int64_t>(distinct.size());
}

} // namespace rainbow
