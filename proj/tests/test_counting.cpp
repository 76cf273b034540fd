#include "doctest.h"

#include "ohba/coloring.hpp"
#include "ohba/counting.hpp"
#include "oracles.hpp"

using namespace ohba;

TEST_CASE("minimum weighted product") {
    CHECK(min_weighted_product({{3, 3}, 2}) == 3);     // tuples (2,0),(1,1),(0,2)
    CHECK(min_weighted_product({{4, 5, 6}, 3}) == 30); // attained at (3,0,0)
    CHECK(min_weighted_product({{2, 7}, 0}) == 14);    // empty shift

    CHECK_THROWS_AS(min_weighted_product({{3}, 1}), ParamError);       // k < 2
    CHECK_THROWS_AS(min_weighted_product({{3, 2}, 1}), ParamError);    // d_1 not minimal
    CHECK_THROWS_AS(min_weighted_product({{3, 3}, 3}), ParamError);    // l > d_1 - 1
    CHECK_THROWS_AS(min_weighted_product({{0, 3}, 0}), ParamError);    // nonpositive weight
}

TEST_CASE("weighted product inequality holds on a small exhaustive grid") {
    // The call itself asserts min == (d_1-l) prod d_i, so a clean sweep is
    // the check.
    for (long long d1 = 1; d1 <= 4; ++d1)
        for (long long d2 = d1; d2 <= 4; ++d2)
            for (long long d3 = d1; d3 <= 4; ++d3)
                for (long long l = 0; l <= d1 - 1; ++l)
                    CHECK(min_weighted_product({{d1, d2, d3}, l}) ==
                          (d1 - l) * d2 * d3);
}

TEST_CASE("lemma17 on the fully disjoint star") {
    const GenericGraph star = make_star(2);
    const ListAssignment L({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    const Lemma17Report r = check_lemma17(star, {1, 2}, L);
    CHECK(r.ok);
    CHECK(r.range_count == 27);
    CHECK(r.product == 9);
}

TEST_CASE("lemma17 preconditions are rejected by name") {
    const GenericGraph star = make_star(2);

    // Path x1 - z - x2 with overlapping x-lists.
    const ListAssignment overlap({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    CHECK_THROWS_WITH_AS(check_lemma17(star, {1, 2}, overlap),
                         "lemma17: lists of x_1 and x_2 are not disjoint", ParamError);

    const ListAssignment short_list({{1, 2}, {4, 5, 6}, {7, 8, 9}});
    CHECK_THROWS_WITH_AS(check_lemma17(star, {1, 2}, short_list),
                         "lemma17: |L(0)| < n", ParamError);

    // x_set must be independent.
    GenericGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    const ListAssignment ok_lists({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK_THROWS_WITH_AS(check_lemma17(path, {0, 1}, ok_lists),
                         "lemma17: x_set is not independent", ParamError);

    CHECK_THROWS_AS(check_lemma17(star, {1}, ok_lists), ParamError);    // s < 2
    CHECK_THROWS_AS(check_lemma17(star, {1, 1}, ok_lists), ParamError); // repeats

    const GenericGraph big(9);
    CHECK_THROWS_AS(
        check_lemma17(big, {0, 1}, ListAssignment(std::vector<ColorSet>(
                                       9, ColorSet{1, 2, 3, 4, 5, 6, 7, 8, 9}))),
        ParamError); // n > 8
}

TEST_CASE("lemma17 on K_{2,2} with disjoint 4-lists") {
    const GenericGraph g = make_complete_bipartite(2, 2);
    const ListAssignment L({{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 5, 6}, {3, 4, 7, 8}});
    const Lemma17Report r = check_lemma17(g, {0, 1}, L);
    CHECK(r.ok);
    CHECK(r.product == 16);
    CHECK(r.range_count >= 16);
    CHECK(r.range_count == test::oracle_ranges(g, L).size());
}

TEST_CASE("lemma17 random instances satisfy the product bound") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Lemma17Instance inst = random_lemma17_instance(seed);
        const Lemma17Report r = check_lemma17(inst.g, inst.x_set, inst.L);
        CHECK(r.ok);
    }
}

TEST_CASE("lemma18 on fully disjoint lists") {
    const ListAssignment L({{10, 11, 12}, {1, 2, 3}, {4, 5, 6}});
    const Lemma18Report r = check_lemma18(2, L);
    CHECK(r.ok);
    CHECK(r.bound == 9);
    CHECK(r.range_count == 27);
}

TEST_CASE("lemma18 with an overlapping center list") {
    const ListAssignment L({{1, 4, 7}, {1, 2, 3}, {4, 5, 6}});
    const Lemma18Report r = check_lemma18(2, L);
    CHECK(r.ok);
    // Independent count: 6 + 6 + 9 ranges over the three center choices.
    CHECK(r.range_count == 21);
    CHECK(r.range_count == test::oracle_ranges(make_star(2), L).size());
}

TEST_CASE("lemma18 preconditions") {
    CHECK_THROWS_AS(check_lemma18(1, ListAssignment({{1, 2}, {3, 4}})), ParamError);
    CHECK_THROWS_AS(
        check_lemma18(2, ListAssignment({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})),
        ParamError); // leaves not disjoint
    CHECK_THROWS_AS(check_lemma18(2, ListAssignment({{1, 2}, {3, 4}, {5, 6}})),
                    ParamError); // not an (s+1)-assignment
}

TEST_CASE("lemma18 random instances satisfy the closed-form bound") {
    for (int s = 2; s <= 4; ++s)
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const ListAssignment L = random_lemma18_assignment(s, 1000 * s + seed);
            const Lemma18Report r = check_lemma18(s, L);
            CHECK(r.ok);
        }
}

TEST_CASE("lemma18 tightness: some center list achieves the bound exactly") {
    // Leaves {1,2,3} and {4,5,6}; scan every 3-subset of [1,9] as center.
    const ColorSet universe = color_range(1, 9);
    bool tight_found = false;
    ColorSet witness;
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j)
            for (std::size_t k = j + 1; k < universe.size(); ++k) {
                const ColorSet center{universe[i], universe[j], universe[k]};
                const Lemma18Report r =
                    check_lemma18(2, ListAssignment({center, {1, 2, 3}, {4, 5, 6}}));
                CHECK(r.range_count >= 9);
                if (r.range_count == 9 && !tight_found) {
                    tight_found = true;
                    witness = center;
                }
            }
    REQUIRE(tight_found);
    INFO("tight center list: " << witness[0] << " " << witness[1] << " " << witness[2]);
    // A center equal to one leaf list collapses the count to exactly 9.
    const Lemma18Report tight =
        check_lemma18(2, ListAssignment({{1, 2, 3}, {1, 2, 3}, {4, 5, 6}}));
    CHECK(tight.range_count == 9);
}
