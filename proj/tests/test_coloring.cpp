#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <sstream>

#include "rainbow/coloring.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/families.hpp"

using namespace rainbow;

namespace {

// Oracle: scan every injective map of the pattern into the host and test
// the mapped edge colors for distinctness. Only for tiny instances.
bool exhaustive_has_rainbow(const ColoredComplete &host, const Tree &pattern) {
    std::vector<int> hosts(host.order());
    std::iota(hosts.begin(), hosts.end(), 0);
    std::vector<int> chosen(pattern.order(), -1);
    std::vector<char> used(host.order(), 0);
    auto rec = [&](auto &&self, int pos) -> bool {
        if (pos == pattern.order()) {
            std::vector<int> cs;
            for (auto [u, v] : pattern.edges()) cs.push_back(host.color(chosen[u], chosen[v]));
            std::sort(cs.begin(), cs.end());
            return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
        }
        for (int hv = 0; hv < host.order(); ++hv) {
            if (used[hv]) continue;
            used[hv] = 1;
            chosen[pos] = hv;
            if (self(self, pos + 1)) {
                used[hv] = 0;
                return true;
            }
            used[hv] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

ColoredComplete monochromatic(int n) {
    return ColoredComplete(n, std::vector<int>(ColoredComplete::pair_count(n), 1));
}

ColoredComplete all_distinct(int n) {
    std::vector<int> colors(ColoredComplete::pair_count(n));
    std::iota(colors.begin(), colors.end(), 1);
    return ColoredComplete(n, std::move(colors));
}

} // namespace

TEST_CASE("coloring construction and palettes") {
    CHECK(monochromatic(3).palette() == std::vector<int>{1});
    CHECK(ColoredComplete(3, {1, 2, 3}).num_colors() == 3);
    CHECK(ColoredComplete(2, {7}).palette() == std::vector<int>{7});

    CHECK_THROWS_AS(ColoredComplete(3, {1, 2}), IncompleteAssignment);
    CHECK_THROWS_AS(ColoredComplete(3, {1, 2, 0}), BadColor);

    CHECK(make_coloring(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}).num_colors() == 3);
    CHECK_THROWS_AS(make_coloring(3, {{0, 1, 1}, {0, 2, 2}}), IncompleteAssignment);
    CHECK_THROWS_AS(make_coloring(3, {{0, 1, 1}, {1, 0, 2}, {1, 2, 3}}), IncompleteAssignment);
    CHECK_THROWS_AS(make_coloring(3, {{0, 1, 1}, {0, 2, -1}, {1, 2, 3}}), BadColor);
}

TEST_CASE("find_rainbow basics") {
    Tree p3 = family(Family::path, {3});
    CHECK_FALSE(find_rainbow(monochromatic(3), p3));
    CHECK(find_rainbow(ColoredComplete(3, {1, 2, 3}), p3).has_value());

    Tree k13 = family(Family::star, {3});
    CHECK_FALSE(is_rainbow_free(all_distinct(5), k13));
    CHECK(is_rainbow_free(monochromatic(5), p3));

    CHECK_THROWS_AS(find_rainbow(monochromatic(3), family(Family::path, {4})),
                    PatternTooLarge);
}

TEST_CASE("any 4-colored K4 contains a rainbow P4 (sampled)") {
    Tree p4 = family(Family::path, {4});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ColoredComplete k4 = random_coloring(4, 4 + static_cast<int>(seed % 3), seed);
        CHECK(find_rainbow(k4, p4).has_value());
    }
}

TEST_CASE("embeddings returned are valid") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ColoredComplete host = random_coloring(7, 8, seed);
        for (int k = 2; k <= 4; ++k) {
            auto embedding = find_rainbow(host, family(Family::star, {k}));
            if (embedding) CHECK(embedding->valid_in(host));
        }
    }
}

TEST_CASE("backtracking search agrees with the exhaustive oracle") {
    std::vector<Tree> patterns;
    for (int n = 2; n <= 5; ++n) {
        TreeCatalog catalog = enumerate_trees(n);
        patterns.insert(patterns.end(), catalog.representatives.begin(),
                        catalog.representatives.end());
    }
    for (int n : {5, 6, 7}) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            int t = 1 + static_cast<int>(seed * 3 % ColoredComplete::pair_count(n));
            ColoredComplete host = random_coloring(n, t, seed + 1000 * n);
            for (const Tree &pattern : patterns) {
                INFO("n=" << n << " t=" << t << " seed=" << seed
                          << " pattern_order=" << pattern.order());
                CHECK(find_rainbow(host, pattern).has_value() ==
                      exhaustive_has_rainbow(host, pattern));
            }
        }
    }
}

TEST_CASE("freeness is invariant under color renaming and host relabeling") {
    Tree pattern = family(Family::spider, {1, 1, 2});
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        ColoredComplete host = random_coloring(7, 5, seed);
        bool base = is_rainbow_free(host, pattern);

        // rename colors with a seeded bijection into a scattered range
        DetRng rng(seed + 99);
        std::map<int, int> rename;
        for (int c : host.palette()) rename[c] = c * 17 + static_cast<int>(rng.below(5)) + 1000;
        std::vector<int> renamed;
        for (int c : host.colors()) renamed.push_back(rename[c]);
        CHECK(is_rainbow_free(ColoredComplete(host.order(), renamed), pattern) == base);

        // relabel host vertices
        std::vector<int> perm(host.order());
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<int> shuffled(host.colors().size());
        for (int u = 0; u < host.order(); ++u)
            for (int v = u + 1; v < host.order(); ++v)
                shuffled[ColoredComplete::pair_index(host.order(), perm[u], perm[v])] =
                    host.color(u, v);
        CHECK(is_rainbow_free(ColoredComplete(host.order(), shuffled), pattern) == base);
    }
}

TEST_CASE("search budget guard") {
    ColoredComplete host = all_distinct(9);
    // budget far smaller than the 9 placements any embedding needs
    CHECK_THROWS_AS(
        find_rainbow(host, family(Family::path, {9}), nullptr, 3),
        SearchBudgetExceeded);
    SearchStats stats;
    CHECK(find_rainbow(host, family(Family::path, {4}), &stats).has_value());
    CHECK(stats.nodes > 0);
}

TEST_CASE("random_coloring uses exactly t colors, deterministically") {
    CHECK(random_coloring(5, 1, 3).palette() == std::vector<int>{1});
    CHECK(random_coloring(5, 10, 4).num_colors() == 10); // C(5,2): all distinct
    CHECK(random_coloring(12, 26, 42).num_colors() == 26);
    for (int t : {1, 3, 7, 15}) CHECK(random_coloring(8, t, 11).num_colors() == t);

    ColoredComplete a = random_coloring(9, 6, 5);
    ColoredComplete b = random_coloring(9, 6, 5);
    CHECK(a.colors() == b.colors());
    ColoredComplete c = random_coloring(9, 6, 6);
    CHECK(a.colors() != c.colors());

    CHECK_THROWS_AS(random_coloring(5, 11, 0), TooManyColors);
    CHECK_THROWS_AS(random_coloring(5, 0, 0), TooManyColors);
}

TEST_CASE("coloring text format round-trips and validates") {
    ColoredComplete original = random_coloring(6, 5, 9);
    std::stringstream buffer;
    write_coloring(buffer, original);
    ColoredComplete back = read_coloring(buffer);
    CHECK(back.order() == original.order());
    CHECK(back.colors() == original.colors());

    auto reject = [](const char *text) {
        std::stringstream in(text);
        CHECK_THROWS(read_coloring(in));
    };
    reject("2 1\n");                        // missing entry
    reject("2 1\n0 1 2\n");                 // color out of range
    reject("3 2\n0 1 1\n0 2 1\n1 2 1\n");   // color 2 never used
    reject("3 2\n0 1 1\n0 1 2\n1 2 2\n");   // duplicate pair
    reject("3 2\n1 0 1\n0 2 1\n1 2 2\n");   // u >= v
}
