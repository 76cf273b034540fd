#include "doctest.h"

#include "ohba/bounds.hpp"
#include "ohba/coloring.hpp"
#include "ohba/constructions.hpp"
#include "oracles.hpp"

using namespace ohba;

TEST_CASE("T1 generator: the k=2 folklore instance") {
    const ConstructionInstance inst = construct_thm1(2, 4);
    CHECK(inst.graph.p() == 0);
    CHECK(inst.graph.a() == 2);
    CHECK(inst.graph.b() == 4);
    CHECK(inst.c_size == 4);
    CHECK(inst.lists.list(0) == ColorSet{1, 2});
    CHECK(inst.lists.list(1) == ColorSet{3, 4});
    CHECK(inst.lists.list(2) == ColorSet{1, 3});
    CHECK(inst.lists.list(5) == ColorSet{2, 4});

    CHECK_FALSE(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    CHECK_FALSE(find_proper_coloring(inst.graph, inst.lists));
    CHECK_FALSE(test::oracle_colorable(inst.graph, inst.lists));
}

TEST_CASE("T1 generator: padding and the cubic case") {
    const ConstructionInstance pad = construct_thm1(2, 5);
    CHECK(pad.lists.list(6) == ColorSet{1, 2}); // padded y_5
    CHECK_FALSE(is_colorable_join_fast(pad.graph, pad.lists).colorable);

    const ConstructionInstance cube = construct_thm1(3, 27);
    CHECK(cube.c_size == 27);
    CHECK_FALSE(is_colorable_join_fast(cube.graph, cube.lists).colorable);

    CHECK_THROWS_AS(construct_thm1(2, 3), ParamError); // t < k^k
}

TEST_CASE("T4 generator at its threshold") {
    const ConstructionInstance inst = construct_thm4(0, 2, 9);
    CHECK(inst.spec.k == 3);
    CHECK(inst.graph.p() == 1);
    CHECK(inst.graph.a() == 2);
    CHECK(inst.c_size == 9);
    CHECK(inst.lists.list(0) == ColorSet{1, 2, 3}); // w1
    CHECK(inst.lists.list(1) == ColorSet{4, 5, 6}); // x1 = block 1
    CHECK(inst.lists.list(2) == ColorSet{1, 2, 3}); // x_{s+2}

    CHECK_FALSE(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    CHECK_FALSE(find_proper_coloring(inst.graph, inst.lists));
    CHECK_FALSE(test::oracle_colorable(inst.graph, inst.lists));
}

TEST_CASE("T4 generator: larger instances and rejections") {
    const ConstructionInstance a = construct_thm4(1, 2, 96);
    CHECK(a.spec.k == 4);
    CHECK(a.c_size == 96);
    CHECK_FALSE(is_colorable_join_fast(a.graph, a.lists).colorable);

    const ConstructionInstance b = construct_thm4(0, 3, 16);
    CHECK(b.spec.k == 4);
    CHECK(b.graph.p() == 2);
    CHECK(b.c_size == 16);
    CHECK_FALSE(is_colorable_join_fast(b.graph, b.lists).colorable);

    CHECK_THROWS_AS(construct_thm4(0, 2, 8), ParamError);  // below threshold
    CHECK_THROWS_AS(construct_thm4(0, 1, 50), ParamError); // l < 2
}

TEST_CASE("T4 tightness: dropping the last structured Y-list frees a range") {
    for (const auto& [s, l, b] : {std::tuple{0, 2, 9LL}, std::tuple{0, 3, 16LL}}) {
        const ConstructionInstance inst = construct_thm4(s, l, b);
        REQUIRE(inst.c_size == b);
        const JoinGraph smaller(inst.graph.p(), inst.graph.a(), b - 1);
        std::vector<ColorSet> lists(inst.lists.lists().begin(),
                                    inst.lists.lists().end() - 1);
        CHECK(is_colorable_join_fast(smaller, ListAssignment(std::move(lists))).colorable);
    }
}

TEST_CASE("T6 generator on the divisible branch") {
    const ConstructionInstance inst = construct_thm6(0, 2, 4, 4);
    CHECK(inst.spec.k == 3);
    CHECK(inst.spec.q == 1);
    CHECK(inst.c_size == 4);
    // Partition complements plus the fresh tail {4}.
    CHECK(inst.lists.list(0) == ColorSet{1, 2, 3}); // w1
    CHECK(inst.lists.list(1) == ColorSet{2, 3, 4}); // x1
    CHECK(inst.lists.list(2) == ColorSet{1, 3, 4}); // x2
    CHECK(inst.lists.list(3) == ColorSet{1, 2, 4}); // x3
    CHECK(inst.lists.list(4) == ColorSet{1, 2, 3}); // x4

    CHECK_FALSE(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    CHECK_FALSE(find_proper_coloring(inst.graph, inst.lists));
    CHECK_FALSE(test::oracle_colorable(inst.graph, inst.lists));

    CHECK(construct_thm6(0, 5, 4, 13).c_size == 13);

    const ConstructionInstance big = construct_thm6(1, 2, 4, 64);
    CHECK(big.spec.k == 4);
    CHECK(big.spec.q == 2);
    CHECK(big.c_size == 64);
    CHECK_FALSE(is_colorable_join_fast(big.graph, big.lists).colorable);
}

TEST_CASE("T6/T7 divisibility dispatch") {
    CHECK_THROWS_WITH_AS(construct_thm6(0, 3, 4, 9),
                         "T6 needs (a-s-1) | (l+s+1); 3 does not divide 4, use the T7 "
                         "generator",
                         ParamError);
    CHECK_THROWS_WITH_AS(construct_thm7(0, 2, 4, 4),
                         "T7 needs (a-s-1) to not divide (l+s+1); 3 divides 3, use the "
                         "T6 generator",
                         ParamError);
}

TEST_CASE("T7 generator on the non-divisible branch") {
    const ConstructionInstance inst = construct_thm7(0, 3, 4, 9);
    CHECK(inst.spec.k == 4);
    CHECK(inst.spec.q == 1);
    CHECK(inst.spec.r == 1);
    CHECK(inst.spec.u == 2);
    CHECK(inst.c_size == 9); // 1 + 8 - 0
    CHECK(inst.lists.list(2) == ColorSet{3, 4, 5, 6}); // x1: [4]-{1,2} + [5:6]
    CHECK(inst.lists.list(3) == ColorSet{1, 2, 4, 5}); // x2: [4]-{3} + {5}
    CHECK(inst.lists.list(4) == ColorSet{1, 2, 3, 5}); // x3: [4]-{4} + {5}

    CHECK_FALSE(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    CHECK_FALSE(find_proper_coloring(inst.graph, inst.lists));

    CHECK(construct_thm7(1, 2, 5, 60).c_size == 60);
    CHECK_THROWS_AS(construct_thm7(0, 3, 4, 8), ParamError); // below threshold 9
}

TEST_CASE("materialized |C| equals the closed form across the small grid") {
    using bounds::Int;
    for (int s = 0; s <= 2; ++s)
        for (int l = 2; l <= 3; ++l) {
            const Int t4 = bounds::thm4_threshold(s, l);
            const ConstructionInstance inst =
                construct_thm4(s, l, static_cast<long long>(t4));
            CHECK(Int(inst.c_size) == t4);
            CHECK(inst.lists.uniform_size() == l + s + 1);
        }

    for (int s = 0; s <= 2; ++s)
        for (int l = 2; l <= 3; ++l)
            for (int a = s + 3; a <= 6; ++a) {
                const bounds::BoundReport thr = bounds::thm67_threshold(s, l, a);
                REQUIRE(thr.valid);
                const long long b =
                    std::max<long long>(a, static_cast<long long>(*thr.value));
                const int k = l + s + 1;
                const ConstructionInstance inst = (k % (a - s - 1) == 0)
                                                      ? construct_thm6(s, l, a, b)
                                                      : construct_thm7(s, l, a, b);
                CHECK(Int(inst.c_size) == *thr.value);
                CHECK(inst.lists.uniform_size() == k);
            }
}

TEST_CASE("verify_construction passes on the witness suite and reports clauses") {
    const VerifyReport r = verify_construction(ConstructionKind::T4, 0, 2, -1, 9);
    CHECK(r.pass);
    CHECK(r.c_size == 9);
    REQUIRE(r.clauses.size() == 6);
    CHECK(r.clauses[0].name == "uncolorable");
    for (const VerifyClause& c : r.clauses) CHECK(c.ok);

    CHECK(verify_construction(ConstructionKind::T6, 0, 2, 4, 4).pass);
    CHECK(verify_construction(ConstructionKind::T7, 0, 3, 4, 9).pass);
    CHECK(verify_construction(ConstructionKind::T1, 0, 0, 2, 4).pass);
}

TEST_CASE("T7 at (0,2,3): the smallest non-divisible instance verifies") {
    CHECK(*bounds::thm67_threshold(0, 2, 3).value == 7);
    const VerifyReport r = verify_construction(ConstructionKind::T7, 0, 2, 3, 7);
    CHECK(r.pass);
    CHECK(r.c_size == 7);
}

TEST_CASE("T7 with q = 0: empty partition blocks still verify") {
    // s=0, l=2, a=6: k = 3 < a-s-1 = 5, so q = 0, r = 3 and two blocks are
    // empty; their X-lists both collapse to [k].
    const ConstructionInstance inst = construct_thm7(0, 2, 6, 6);
    CHECK(inst.spec.q == 0);
    CHECK(inst.spec.r == 3);
    CHECK(inst.spec.u == 0);
    CHECK(inst.c_size == 4); // C(3,3) + C(3,2)*1 - C(0,2)
    CHECK(inst.lists.list(inst.graph.p() + 3) == ColorSet{1, 2, 3}); // x4
    CHECK(inst.lists.list(inst.graph.p() + 4) == ColorSet{1, 2, 3}); // x5

    const VerifyReport r = verify_construction(ConstructionKind::T7, 0, 2, 6, 6);
    CHECK(r.pass);
    CHECK_FALSE(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    CHECK_FALSE(find_proper_coloring(inst.graph, inst.lists));
}

TEST_CASE("construct dispatch mirrors the per-theorem generators") {
    const ConstructionInstance via = construct(ConstructionKind::T4, 0, 2, -1, 9);
    CHECK(via.c_size == 9);
    CHECK_THROWS_AS(construct(ConstructionKind::T6, 0, 2, 4, 3), ParamError); // b < a
}
