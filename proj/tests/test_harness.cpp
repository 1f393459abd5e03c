#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "rainbow/harness.hpp"

using namespace rainbow;

namespace {

// Independent oracle for partition counts: Stirling numbers of the second
// kind by the recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
long long stirling2(int n, int k) {
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

std::vector<Edge> p5_middle_first() {
    Tree p5 = family(Family::path, {5});
    std::vector<Edge> order = p5.edges();
    std::iter_swap(order.begin(), std::find(order.begin(), order.end(), Edge{1, 2}));
    return order;
}

} // namespace

TEST_CASE("set partition enumerator visits each partition once") {
    long long bell6 = 0;
    for (int k = 1; k <= 6; ++k) bell6 += stirling2(6, k);
    CHECK(bell6 == 203);

    std::set<std::vector<int>> seen;
    std::uint64_t total = 0;
    for_each_set_partition(6, [&](const std::vector<int> &block) {
        ++total;
        CHECK(seen.insert(block).second);
    });
    CHECK(total == static_cast<std::uint64_t>(bell6));
}

TEST_CASE("exhaustive K4 check covers exactly the >=4-block partitions") {
    long long expected = stirling2(6, 4) + stirling2(6, 5) + stirling2(6, 6);
    CHECK(expected == 81);
    std::uint64_t checked = 0;
    CHECK(tw_exhaustive_k4(&checked));
    CHECK(checked == 81);
}

TEST_CASE("the all-distinct coloring of K4 has a rainbow P4") {
    std::vector<int> colors{1, 2, 3, 4, 5, 6};
    CHECK(find_rainbow(ColoredComplete(4, colors), family(Family::path, {4})).has_value());
}

TEST_CASE("randomized P4 checks") {
    CHECK(tw_randomized(4, 100, 7));
    CHECK(tw_randomized(6, 200, 1));
    CHECK(tw_randomized(10, 50, 3));
    CHECK_THROWS_AS(tw_randomized(3, 10, 0), OrderOutOfRange);
    CHECK_THROWS_AS(tw_randomized(6, 0, 0), OrderOutOfRange);
}

TEST_CASE("implication test: premise P3, conclusion P4") {
    auto outcomes = implication_test(family(Family::path, {4}), family(Family::path, {3}),
                                     6, 4, 100, 2);
    REQUIRE(outcomes.size() == 100);
    for (const auto &o : outcomes) {
        CHECK(o.n == 6);
        CHECK(o.t == 4);
        CHECK_FALSE(o.violation);
        CHECK(o.violation == (o.premise_held && !o.conclusion_held));
    }
}

TEST_CASE("implication test is deterministic in the seed") {
    auto a = implication_test(family(Family::spider, {1, 1, 3}),
                              family(Family::double_star, {2, 2}), 10, 20, 30, 11);
    auto b = implication_test(family(Family::spider, {1, 1, 3}),
                              family(Family::double_star, {2, 2}), 10, 20, 30, 11);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].premise_held == b[i].premise_held);
        CHECK(a[i].conclusion_held == b[i].conclusion_held);
    }
}

TEST_CASE("sampled implication trials for the spider/double-star pair") {
    auto outcomes = implication_test(family(Family::spider, {1, 1, 3}),
                                     family(Family::double_star, {2, 2}), 12, 26, 50, 5);
    for (const auto &o : outcomes) CHECK_FALSE(o.violation);
}

TEST_CASE("the harness detects a planted refutation") {
    Tree p5 = family(Family::path, {5});
    Tree k14 = family(Family::star, {4});
    ColoredComplete witness = lemma1_witness(p5, p5_middle_first(), 6);
    TrialOutcome outcome = implication_trial(witness, k14, p5, 0);
    CHECK(outcome.premise_held);
    CHECK_FALSE(outcome.conclusion_held);
    CHECK(outcome.violation);
}

TEST_CASE("counterexample search finds a (K_{1,4}, P5) witness") {
    Tree k14 = family(Family::star, {4});
    Tree p5 = family(Family::path, {5});
    for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
        auto found = counterexample_search(k14, p5, 9, 6, 1, seed);
        INFO("seed " << seed);
        REQUIRE(found.has_value());
        CHECK(verify_nonle(*found, k14, p5, found->num_colors()).ok());
        CHECK(found->num_colors() >= 6);
    }
}

TEST_CASE("counterexample search with identical trees finds nothing") {
    Tree p3 = family(Family::path, {3});
    CHECK_FALSE(counterexample_search(p3, p3, 6, 3, 2, 1).has_value());
}

TEST_CASE("exploratory search on the open F'2 vs F2 pair only reports verified output") {
    // No expected answer here; whatever comes back must already have passed
    // verify_nonle, and an empty result proves nothing.
    Tree f2p = family(Family::F_prime, {2});
    Tree f2 = family(Family::F, {2});
    auto found = counterexample_search(f2p, f2, 12, 10, 2, 7);
    if (found) {
        CHECK(verify_nonle(*found, f2p, f2, found->num_colors()).ok());
        CHECK(found->num_colors() >= 10);
    }
}

TEST_CASE("counterexample search validates its input") {
    Tree p5 = family(Family::path, {5});
    CHECK_THROWS_AS(counterexample_search(p5, p5, 4, 3, 1, 0), OrderOutOfRange);
    CHECK_THROWS_AS(counterexample_search(p5, p5, 6, 20, 1, 0), TooManyColors);
}
