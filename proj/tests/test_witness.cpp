#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "rainbow/witness.hpp"

using namespace rainbow;

namespace {

// middle edge first, as the constructions ask when diam >= 3
std::vector<Edge> p5_middle_first() {
    Tree p5 = family(Family::path, {5});
    std::vector<Edge> order = p5.edges();
    auto middle = std::find(order.begin(), order.end(), Edge{1, 2});
    REQUIRE(middle != order.end());
    std::iter_swap(order.begin(), middle);
    return order;
}

} // namespace

TEST_CASE("lemma1 witness for (K_{1,4}, P5)") {
    Tree p5 = family(Family::path, {5});
    Tree k14 = family(Family::star, {4});
    ColoredComplete k = lemma1_witness(p5, p5_middle_first(), 6);

    CHECK(k.order() == 9); // 5 + 2*(6-5+1)
    CHECK(k.num_colors() == 6);
    CHECK(k.palette() == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(find_rainbow(k, p5).has_value());
    CHECK(is_rainbow_free(k, k14));
}

TEST_CASE("lemma1 witness plants the target tree") {
    Tree k14 = family(Family::star, {4});
    ColoredComplete k = lemma1_witness(k14, k14.edges(), 6);
    CHECK(find_rainbow(k, k14).has_value());
}

TEST_CASE("lemma1 witness: everything off the copy and the matching is color 1") {
    Tree p5 = family(Family::path, {5});
    auto order = p5_middle_first();
    const int t = 7;
    ColoredComplete k = lemma1_witness(p5, order, t);
    const int n = p5.order();

    std::set<Edge> special;
    // the planted copy is the BFS relabeling of p5 from vertex 0; for a path
    // labeled along itself that BFS is the identity
    for (Edge e : p5.edges()) special.insert(e);
    for (int j = n; j <= t; ++j) {
        int y = n + 2 * (j - n);
        special.insert({y, y + 1});
    }
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            if (!special.count({u, v})) CHECK(k.color(u, v) == 1);
}

TEST_CASE("lemma1 witness extends monotonically in t") {
    Tree p5 = family(Family::path, {5});
    auto order = p5_middle_first();
    ColoredComplete small = lemma1_witness(p5, order, 6);
    ColoredComplete big = lemma1_witness(p5, order, 9);
    for (int u = 0; u < small.order(); ++u)
        for (int v = u + 1; v < small.order(); ++v)
            CHECK(small.color(u, v) == big.color(u, v));
}

TEST_CASE("lemma1 witness works for branching trees too") {
    Tree b = family(Family::double_star, {2, 2});
    ColoredComplete k = lemma1_witness(b, component_balanced_edge_order(b), 7);
    CHECK(k.order() == 6 + 2 * (7 - 6 + 1));
    CHECK(k.num_colors() == 7);
    CHECK(find_rainbow(k, b).has_value());
}

TEST_CASE("lemma1 witness rejects bad input") {
    Tree p5 = family(Family::path, {5});
    CHECK_THROWS_AS(lemma1_witness(p5, p5.edges(), 4), BadColorBudget);
    std::vector<Edge> wrong = p5.edges();
    wrong[0] = {0, 2};
    CHECK_THROWS_AS(lemma1_witness(p5, wrong, 6), BadEdgeOrder);
    wrong = p5.edges();
    wrong.pop_back();
    CHECK_THROWS_AS(lemma1_witness(p5, wrong, 6), BadEdgeOrder);
}

TEST_CASE("component-balanced edge order") {
    Tree p5 = family(Family::path, {5});
    auto order = component_balanced_edge_order(p5);
    CHECK(p5.degree(order[0].first) >= 2);
    CHECK(p5.degree(order[0].second) >= 2);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == p5.edges());

    // a star has no such edge; any permutation is acceptable
    Tree star = family(Family::star, {4});
    auto fallback = component_balanced_edge_order(star);
    std::sort(fallback.begin(), fallback.end());
    CHECK(fallback == star.edges());
}

TEST_CASE("star witness") {
    ColoredComplete k = star_witness(8);
    CHECK(k.order() == 9);
    CHECK(k.num_colors() == 8);
    for (int deg = 1; deg <= 8; ++deg)
        CHECK(find_rainbow(k, family(Family::star, {deg})).has_value());
    CHECK(find_rainbow(k, family(Family::star_plus, {3})).has_value());
    CHECK(is_rainbow_free(k, family(Family::path, {5})));
    CHECK_THROWS_AS(star_witness(2), BadColorBudget);
}

TEST_CASE("fk witness at k=3") {
    ColoredComplete k = fk_witness(3, 10);
    CHECK(k.order() == 12); // 10 + 2*(10-9)
    CHECK(k.num_colors() == 10);
    CHECK(find_rainbow(k, family(Family::F, {3})).has_value());
    CHECK(is_rainbow_free(k, family(Family::F_prime, {3})));

    CHECK_THROWS_AS(fk_witness(2, 10), BadParam);
    CHECK_THROWS_AS(fk_witness(3, 9), BadColorBudget);
}

TEST_CASE("bstar witness at k=3") {
    ColoredComplete k = bstar_witness(3, 8);
    CHECK(k.order() == 11); // 7 + 2*(8-6)
    CHECK(k.num_colors() == 8);
    CHECK(find_rainbow(k, family(Family::B_star, {2, 2})).has_value());
    CHECK(is_rainbow_free(k, family(Family::B_star, {3, 1})));

    CHECK_THROWS_AS(bstar_witness(2, 8), BadParam);
    CHECK_THROWS_AS(bstar_witness(3, 7), BadColorBudget);
}

TEST_CASE("family witnesses at larger parameters keep their contract") {
    ColoredComplete f = fk_witness(4, 14);
    CHECK(f.order() == 13 + 2 * (14 - 12));
    CHECK(f.num_colors() == 14);
    CHECK(find_rainbow(f, family(Family::F, {4})).has_value());

    ColoredComplete b = bstar_witness(4, 10);
    CHECK(b.order() == 9 + 2 * (10 - 8));
    CHECK(b.num_colors() == 10);
    CHECK(find_rainbow(b, family(Family::B_star, {3, 3})).has_value());
}

TEST_CASE("verify_nonle composes the three checks") {
    Tree p5 = family(Family::path, {5});
    Tree k14 = family(Family::star, {4});

    VerificationReport a = verify_nonle(lemma1_witness(p5, p5_middle_first(), 6), k14, p5, 6);
    CHECK(a.color_count_ok);
    CHECK(a.contains_target);
    CHECK(a.free_of_pattern);
    CHECK(a.ok());
    REQUIRE(a.embedding.has_value());
    CHECK(a.embedding->valid_in(lemma1_witness(p5, p5_middle_first(), 6)));
    CHECK(a.nodes_searched > 0);

    VerificationReport b =
        verify_nonle(fk_witness(3, 10), family(Family::F_prime, {3}), family(Family::F, {3}), 10);
    CHECK(b.ok());

    VerificationReport c = verify_nonle(star_witness(8), p5, k14, 8);
    CHECK(c.ok());

    // wrong color count flips only that check
    VerificationReport d = verify_nonle(star_witness(8), p5, k14, 9);
    CHECK_FALSE(d.color_count_ok);
    CHECK(d.contains_target);
    CHECK_FALSE(d.ok());
}
