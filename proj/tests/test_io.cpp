#include "doctest.h"

#include <sstream>

#include "ohba/io.hpp"

using namespace ohba;

TEST_CASE("graph format: join header") {
    std::istringstream in("# a comment\njoin 1 2 9\n");
    const ParsedGraph g = read_graph(in);
    const auto& j = std::get<JoinGraph>(g);
    CHECK(j.p() == 1);
    CHECK(j.a() == 2);
    CHECK(j.b() == 9);
}

TEST_CASE("graph format: edge list") {
    std::istringstream in("n 4\ne 0 1\ne 1 2\ne 2 3\n");
    const ParsedGraph g = read_graph(in);
    const auto& gg = std::get<GenericGraph>(g);
    CHECK(gg.vertex_count() == 4);
    CHECK(gg.edge_count() == 3);
    CHECK(gg.adjacent(0, 1));
    CHECK_FALSE(gg.adjacent(0, 2));
}

TEST_CASE("graph format errors carry line numbers") {
    std::istringstream bad1("join 1 2\n");
    CHECK_THROWS_WITH_AS(read_graph(bad1), "line 1: expected 'join <p> <a> <b>'",
                         InputError);
    std::istringstream bad2("n 3\ne 0 5\n");
    CHECK_THROWS_WITH_AS(read_graph(bad2), "line 2: edge endpoint out of range",
                         InputError);
    std::istringstream bad3("graph 3\n");
    CHECK_THROWS_AS(read_graph(bad3), InputError);
    std::istringstream bad4("join 2 3 2\n");
    CHECK_THROWS_AS(read_graph(bad4), InputError); // a > b
}

TEST_CASE("list format round-trips") {
    const ParsedGraph g = JoinGraph(1, 2, 2);
    std::istringstream in("k 2\nw1: 1 2\nx1: 3 4\nx2: 5 6\ny1: 1 3\ny2: 2 5\n");
    const ListAssignment L = read_lists(in, g);
    CHECK(L.uniform_size() == 2);
    CHECK(L.list(0) == ColorSet{1, 2});
    CHECK(L.list(2) == ColorSet{5, 6});

    std::ostringstream out;
    write_lists(out, g, L);
    std::istringstream back(out.str());
    const ListAssignment L2 = read_lists(back, g);
    CHECK(L2.lists() == L.lists());
}

TEST_CASE("list format: integer ids for generic graphs") {
    GenericGraph gg(2);
    gg.add_edge(0, 1);
    const ParsedGraph g = gg;
    std::istringstream in("0: 1 2 3\n1: 4\n");
    const ListAssignment L = read_lists(in, g);
    CHECK(L.list(1) == ColorSet{4});
}

TEST_CASE("list format errors") {
    const ParsedGraph g = JoinGraph(0, 1, 1);

    std::istringstream missing("x1: 1 2\n");
    CHECK_THROWS_AS(read_lists(missing, g), InputError); // y1 has no list

    std::istringstream dup("x1: 1\nx1: 2\ny1: 1\n");
    CHECK_THROWS_AS(read_lists(dup, g), InputError);

    std::istringstream wrong_k("k 2\nx1: 1 2\ny1: 3\n");
    CHECK_THROWS_AS(read_lists(wrong_k, g), InputError);

    std::istringstream bad_id("x9: 1\ny1: 2\n");
    CHECK_THROWS_AS(read_lists(bad_id, g), InputError);

    std::istringstream empty_list("x1:\ny1: 2\n");
    CHECK_THROWS_AS(read_lists(empty_list, g), InputError);
}

TEST_CASE("coloring serializes as singleton lists") {
    const ParsedGraph g = JoinGraph(0, 1, 2);
    const Coloring f{{3, 1, 2}};
    std::ostringstream out;
    write_coloring(out, g, f);
    CHECK(out.str() == "x1: 3\ny1: 1\ny2: 2\n");
}
