#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/families.hpp"
#include "rainbow/witness.hpp"

namespace rainbow {

/// Calls fn(block) for every set partition of {0..n-1}, where block[i] is
/// the block index of element i in restricted-growth form (block[0] = 0,
/// each next index at most max-so-far + 1). Each partition appears once.
template <class Fn> inline void for_each_set_partition(int n, Fn &&fn) {
    std::vector<int> block(n, 0);
    auto rec = [&](auto &&self, int i, int max_used) -> void {
        if (i == n) {
            fn(block);
            return;
        }
        for (int b = 0; b <= max_used + 1 && b < n; ++b) {
            block[i] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    if (n > 0) rec(rec, 1, 0);
    else fn(block);
}

/// Checks every coloring of the 6 edges of K4 with at least 4 colors for a
/// rainbow path on 4 vertices; colorings are identified with set partitions
/// of the edge set (blocks = color classes). Returns true iff none fails;
/// the number of partitions examined is reported through `partitions`.
inline bool tw_exhaustive_k4(std::uint64_t *partitions = nullptr) {
    const Tree p4 = family(Family::path, {4});
    bool all_pass = true;
    std::uint64_t checked = 0;
    for_each_set_partition(6, [&](const std::vector<int> &block) {
        int blocks = *std::max_element(block.begin(), block.end()) + 1;
        if (blocks < 4) return;
        ++checked;
        std::vector<int> colors(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) colors[i] = block[i] + 1;
        if (!find_rainbow(ColoredComplete(4, std::move(colors)), p4)) all_pass = false;
    });
    if (partitions) *partitions = checked;
    return all_pass;
}

/// Seeded sampling version on larger hosts: every random coloring with at
/// least 4 colors must contain a rainbow path on 4 vertices.
inline bool tw_randomized(int n, int trials, std::uint64_t seed) {
    if (n < 4) throw OrderOutOfRange("tw_randomized: need n >= 4");
    if (trials < 1) throw OrderOutOfRange("tw_randomized: need trials >= 1");
    const Tree p4 = family(Family::path, {4});
    const std::uint64_t max_t = ColoredComplete::pair_count(n);
    for (int i = 0; i < trials; ++i) {
        DetRng rng(derive_seed(seed, i));
        int t = 4 + static_cast<int>(rng.below(max_t - 3));
        ColoredComplete coloring = random_coloring(n, t, rng.next());
        if (!find_rainbow(coloring, p4)) return false;
    }
    return true;
}

/// One observation of the implication "rainbow premise present => rainbow
/// conclusion present". A violation on any coloring refutes forced <= premise
/// at that color count.
struct TrialOutcome {
    std::uint64_t seed = 0;
    int n = 0;
    int t = 0;
    bool premise_held = false;
    bool conclusion_held = false;
    bool violation = false;
};

inline TrialOutcome implication_trial(const ColoredComplete &coloring, const Tree &forced,
                                      const Tree &premise, std::uint64_t seed) {
    TrialOutcome out;
    out.seed = seed;
    out.n = coloring.order();
    out.t = coloring.num_colors();
    out.premise_held = find_rainbow(coloring, premise).has_value();
    out.conclusion_held = find_rainbow(coloring, forced).has_value();
    out.violation = out.premise_held && !out.conclusion_held;
    return out;
}

/// Runs implication_trial on `trials` seeded random colorings of K_n with t
/// colors. Per-trial seeds are derived from the master seed by index, so the
/// outcome sequence is deterministic and independent of execution order.
inline std::vector<TrialOutcome> implication_test(const Tree &forced, const Tree &premise,
                                                  int n, int t, int trials,
                                                  std::uint64_t seed) {
    std::vector<TrialOutcome> outcomes;
    outcomes.reserve(trials);
    for (int i = 0; i < trials; ++i) {
        std::uint64_t trial_seed = derive_seed(seed, i);
        outcomes.push_back(
            implication_trial(random_coloring(n, t, trial_seed), forced, premise, trial_seed));
    }
    return outcomes;
}

/// Seeded random-restart local search for a coloring of K_n that is rainbow
/// t1-free, keeps at least t colors and still contains a rainbow t2. Each
/// step recolors one edge of a found rainbow t1 copy to the color of an
/// adjacent copy edge, skipping moves that would drop the palette below t;
/// a restart happens when no move is left. Anything returned has already
/// passed verify_nonle, and an empty result proves nothing.
inline std::optional<ColoredComplete> counterexample_search(const Tree &t1, const Tree &t2,
                                                            int n, int t, int trials,
                                                            std::uint64_t seed) {
    if (n < t2.order()) throw OrderOutOfRange("counterexample_search: need n >= |T2|");
    if (t < 1 || static_cast<std::size_t>(t) > ColoredComplete::pair_count(n))
        throw TooManyColors("counterexample_search: need 1 <= t <= C(n,2)");
    const bool t1_fits = t1.order() <= n;
    const int max_steps = 400 * n;
    for (int trial = 0; trial < trials; ++trial) {
        DetRng rng(derive_seed(seed, trial));
        ColoredComplete coloring = random_coloring(n, t, rng.next());
        for (int step = 0; step < max_steps; ++step) {
            std::optional<RainbowEmbedding> copy;
            if (t1_fits) copy = find_rainbow(coloring, t1);
            if (!copy) {
                if (coloring.num_colors() >= t && find_rainbow(coloring, t2) &&
                    verify_nonle(coloring, t1, t2, coloring.num_colors()).ok())
                    return coloring;
                break; // t1-free but not a witness: restart
            }
            std::vector<int> usage; // color -> multiplicity
            for (int c : coloring.colors()) {
                if (c >= static_cast<int>(usage.size())) usage.resize(c + 1, 0);
                ++usage[c];
            }
            // copy edges in host coordinates
            std::vector<Edge> host_edges;
            for (auto [u, v] : t1.edges())
                host_edges.push_back(make_edge(copy->map[u], copy->map[v]));
            struct Move {
                Edge edge;
                int color;
            };
            std::vector<Move> moves;
            for (std::size_t a = 0; a < host_edges.size(); ++a)
                for (std::size_t b = 0; b < host_edges.size(); ++b) {
                    if (a == b) continue;
                    Edge ea = host_edges[a], eb = host_edges[b];
                    bool adjacent = ea.first == eb.first || ea.first == eb.second ||
                                    ea.second == eb.first || ea.second == eb.second;
                    if (!adjacent) continue;
                    int cur = coloring.color(ea.first, ea.second);
                    int next = coloring.color(eb.first, eb.second);
                    if (cur == next || usage[cur] < 2) continue;
                    moves.push_back({ea, next});
                }
            if (moves.empty()) break; // any recoloring would shrink the palette
            const Move &m = moves[rng.below(moves.size())];
            coloring = coloring.recolored(m.edge.first, m.edge.second, m.color);
        }
    }
    return std::nullopt;
}

} // namespace rainbow
