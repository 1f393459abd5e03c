#pragma once

#include <map>
#include <optional>
#include <set>
#include <thread>

#include "rainbow/enumerate.hpp"
#include "rainbow/families.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

namespace detail {

// Vertex sets of the two components of t - e, the side of e.first listed first.
inline std::pair<std::vector<int>, std::vector<int>> split_at_edge(const Tree &t, Edge e) {
    std::vector<char> first_side(t.order(), 0);
    std::vector<int> stack{e.first};
    first_side[e.first] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v)) {
            if (v == e.first && w == e.second) continue;
            if (v == e.second && w == e.first) continue;
            if (!first_side[w]) {
                first_side[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < t.order(); ++v) (first_side[v] ? out.first : out.second).push_back(v);
    return out;
}

inline std::vector<Edge> edges_without(const Tree &t, Edge e) {
    std::vector<Edge> edges;
    edges.reserve(t.edges().size() - 1);
    for (Edge f : t.edges())
        if (f != e) edges.push_back(f);
    return edges;
}

} // namespace detail

/// The tree t - removed + added. `removed` must be a tree edge and `added`
/// a non-edge reconnecting the two components; anything else fails tree
/// validation or EdgeNotInTree.
inline Tree apply_flip(const Tree &t, Edge removed, Edge added) {
    removed = make_edge(removed.first, removed.second);
    if (!t.has_edge(removed.first, removed.second))
        throw EdgeNotInTree("apply_flip: removed edge not in tree");
    std::vector<Edge> edges = detail::edges_without(t, removed);
    edges.push_back(make_edge(added.first, added.second));
    return Tree(t.order(), std::move(edges));
}

/// Canonical codes of every tree t2 - e + e' where e' runs over the
/// reconnecting non-edges. Only pairs joining the two components of t2 - e
/// can yield a tree, and e itself is excluded because e' must avoid E(t2).
inline std::set<CanonicalCode> flip_results(const Tree &t2, Edge e) {
    e = make_edge(e.first, e.second);
    if (!t2.has_edge(e.first, e.second)) throw EdgeNotInTree("flip_results: edge not in tree");
    auto [side_a, side_b] = detail::split_at_edge(t2, e);
    std::vector<Edge> base = detail::edges_without(t2, e);
    std::set<CanonicalCode> out;
    for (int a : side_a)
        for (int b : side_b) {
            Edge candidate = make_edge(a, b);
            if (candidate == e) continue;
            std::vector<Edge> edges = base;
            edges.push_back(candidate);
            out.insert(canonical_code(Tree(t2.order(), std::move(edges))));
        }
    return out;
}

struct EdgeFlipOutcome {
    Edge removed;
    std::optional<Edge> witness; // empty marks a failing edge
};

/// Decision record for "every edge of T2 flips into T1": one entry per edge
/// of T2, each carrying a reconnecting witness edge or a failure marker.
struct FlipReport {
    CanonicalCode t1_code;
    CanonicalCode t2_code;
    std::vector<EdgeFlipOutcome> per_edge;
    bool satisfied = false;
};

inline FlipReport satisfies_flip_condition(const Tree &t1, const Tree &t2) {
    if (t1.order() != t2.order())
        throw OrderMismatch("satisfies_flip_condition: trees must have equal order");
    FlipReport report;
    report.t1_code = canonical_code(t1);
    report.t2_code = canonical_code(t2);
    report.satisfied = true;
    for (Edge e : t2.edges()) {
        auto [side_a, side_b] = detail::split_at_edge(t2, e);
        std::vector<Edge> base = detail::edges_without(t2, e);
        std::optional<Edge> witness;
        for (int a : side_a) {
            for (int b : side_b) {
                Edge candidate = make_edge(a, b);
                if (candidate == e) continue;
                std::vector<Edge> edges = base;
                edges.push_back(candidate);
                if (canonical_code(Tree(t2.order(), std::move(edges))) == report.t1_code) {
                    witness = candidate;
                    break;
                }
            }
            if (witness) break;
        }
        if (!witness) report.satisfied = false;
        report.per_edge.push_back({e, witness});
    }
    return report;
}

/// Ordered pair of canonical codes; (t1, t2) reads "t1 reachable from t2 by
/// flipping any edge".
struct OrderedCodePair {
    CanonicalCode t1;
    CanonicalCode t2;
    friend bool operator==(const OrderedCodePair &, const OrderedCodePair &) = default;
    // report ordering: by target tree first for reproducible diffs
    friend bool operator<(const OrderedCodePair &a, const OrderedCodePair &b) {
        if (a.t2 != b.t2) return a.t2 < b.t2;
        return a.t1 < b.t1;
    }
};

/// All pairs from the known family list whose trees have order n:
/// (star_plus(k), star(k+1)) for every n >= 5, (F_prime(m), F(m)) when
/// n = 3m+1, (B_star(k,k-2), B_star(k-1,k-1)) at odd n >= 7, and the three
/// sporadic pairs at orders 5, 6 and 7.
inline std::vector<std::pair<FamilySpec, FamilySpec>> expected_pairs(int n) {
    std::vector<std::pair<FamilySpec, FamilySpec>> out;
    if (n < 5) return out;
    out.push_back({{Family::star_plus, {n - 2}}, {Family::star, {n - 1}}});
    if (n == 5) out.push_back({{Family::star_plus, {3}}, {Family::path, {5}}});
    if (n == 6) out.push_back({{Family::spider, {1, 1, 3}}, {Family::double_star, {2, 2}}});
    if (n == 7) out.push_back({{Family::spider, {1, 2, 3}}, {Family::path, {7}}});
    if (n >= 7 && (n - 1) % 3 == 0) {
        int m = (n - 1) / 3;
        out.push_back({{Family::F_prime, {m}}, {Family::F, {m}}});
    }
    if (n >= 7 && n % 2 == 1) {
        int k = (n - 1) / 2;
        out.push_back({{Family::B_star, {k, k - 2}}, {Family::B_star, {k - 1, k - 1}}});
    }
    return out;
}

inline std::vector<OrderedCodePair> expected_code_pairs(int n) {
    std::set<OrderedCodePair> dedup;
    for (const auto &[s1, s2] : expected_pairs(n))
        dedup.insert({canonical_code(family(s1)), canonical_code(family(s2))});
    return {dedup.begin(), dedup.end()};
}

/// Names a canonical code after a family instance of order n when it matches
/// one from the expected list (or a plain path/star); empty otherwise.
inline std::string family_annotation(const CanonicalCode &code, int n) {
    std::vector<FamilySpec> known{{Family::path, {n}}, {Family::star, {n - 1}}};
    for (const auto &[s1, s2] : expected_pairs(n)) {
        known.push_back(s1);
        known.push_back(s2);
    }
    for (const auto &spec : known)
        if (canonical_code(family(spec)) == code) return to_string(spec);
    return "";
}

namespace detail {

// Codes of all trees reachable from t2 by flipping each of its edges, i.e.
// the intersection over e of flip_results(t2, e). A tree T1 satisfies the
// flip condition against t2 exactly when its code lies in this set.
inline std::set<CanonicalCode> flip_satisfier_set(const Tree &t2) {
    std::set<CanonicalCode> acc;
    bool first = true;
    for (Edge e : t2.edges()) {
        std::set<CanonicalCode> cur = flip_results(t2, e);
        if (first) {
            acc = std::move(cur);
            first = false;
        } else {
            std::set<CanonicalCode> both;
            std::set_intersection(acc.begin(), acc.end(), cur.begin(), cur.end(),
                                  std::inserter(both, both.begin()));
            acc = std::move(both);
        }
        if (acc.empty()) break;
    }
    return acc;
}

template <class Fn> inline void run_chunked(std::size_t count, int jobs, Fn &&fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 2) {
        fn(0, count, 0);
        return;
    }
    std::size_t workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = count * w / workers;
        std::size_t hi = count * (w + 1) / workers;
        pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
    }
    for (auto &th : pool) th.join();
}

} // namespace detail

/// Per-order comparison of the brute-force flip scan against the family
/// list. found_pairs covers ordered pairs with differing degree sequences;
/// pairs with equal degree sequences that also satisfy the condition are
/// reported separately and nothing is asserted about them.
struct PairClassification {
    int order = 0;
    std::vector<OrderedCodePair> found_pairs;
    std::vector<OrderedCodePair> expected;
    std::vector<OrderedCodePair> extra;
    std::vector<OrderedCodePair> missing;
    std::vector<OrderedCodePair> same_ds_pairs;
    bool match = false;
};

/// Scans all ordered pairs of isomorphism classes of order n (5..12) and
/// checks that the flip-condition pairs with different degree sequences are
/// exactly the expected family pairs. The pair space may be partitioned
/// across `jobs` workers; results are merged, so the outcome does not
/// depend on the partitioning.
inline PairClassification verify_thm1(int n, int jobs = 1) {
    if (n < 5 || n > 12) throw OrderOutOfRange("verify_thm1: order must be in [5,12]");
    TreeCatalog catalog = enumerate_trees(n);
    const std::size_t count = catalog.representatives.size();
    std::vector<DegreeSequence> ds(count);
    for (std::size_t i = 0; i < count; ++i) ds[i] = degree_sequence(catalog.representatives[i]);

    std::vector<std::vector<OrderedCodePair>> found(std::max(1, jobs));
    std::vector<std::vector<OrderedCodePair>> same_ds(std::max(1, jobs));
    detail::run_chunked(count, jobs, [&](std::size_t lo, std::size_t hi, std::size_t worker) {
        for (std::size_t j = lo; j < hi; ++j) {
            auto satisfiers = detail::flip_satisfier_set(catalog.representatives[j]);
            if (satisfiers.empty()) continue;
            for (std::size_t i = 0; i < count; ++i) {
                if (i == j || !satisfiers.count(catalog.codes[i])) continue;
                OrderedCodePair pair{catalog.codes[i], catalog.codes[j]};
                (ds[i] != ds[j] ? found : same_ds)[worker].push_back(pair);
            }
        }
    });

    PairClassification result;
    result.order = n;
    for (auto &chunk : found)
        result.found_pairs.insert(result.found_pairs.end(), chunk.begin(), chunk.end());
    for (auto &chunk : same_ds)
        result.same_ds_pairs.insert(result.same_ds_pairs.end(), chunk.begin(), chunk.end());
    std::sort(result.found_pairs.begin(), result.found_pairs.end());
    std::sort(result.same_ds_pairs.begin(), result.same_ds_pairs.end());
    result.expected = expected_code_pairs(n);
    std::set_difference(result.found_pairs.begin(), result.found_pairs.end(),
                        result.expected.begin(), result.expected.end(),
                        std::back_inserter(result.extra));
    std::set_difference(result.expected.begin(), result.expected.end(),
                        result.found_pairs.begin(), result.found_pairs.end(),
                        std::back_inserter(result.missing));
    result.match = result.extra.empty() && result.missing.empty();
    return result;
}

/// True iff no ordered pair of order-n trees with different degree sequences
/// satisfies the flip condition in both directions.
inline bool antisymmetry_check(int n, int jobs = 1) {
    if (n < 5 || n > 12) throw OrderOutOfRange("antisymmetry_check: order must be in [5,12]");
    TreeCatalog catalog = enumerate_trees(n);
    const std::size_t count = catalog.representatives.size();
    std::vector<DegreeSequence> ds(count);
    for (std::size_t i = 0; i < count; ++i) ds[i] = degree_sequence(catalog.representatives[i]);
    std::vector<std::vector<char>> holds(count, std::vector<char>(count, 0));
    detail::run_chunked(count, jobs, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t j = lo; j < hi; ++j) {
            auto satisfiers = detail::flip_satisfier_set(catalog.representatives[j]);
            for (std::size_t i = 0; i < count; ++i)
                if (i != j && ds[i] != ds[j] && satisfiers.count(catalog.codes[i]))
                    holds[i][j] = 1;
        }
    });
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (holds[i][j] && holds[j][i]) return false;
    return true;
}

} // namespace rainbow
