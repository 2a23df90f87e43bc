#include <doctest.h>

#include <sstream>

#include "isokit/io.hpp"

using namespace isokit;

TEST_CASE("edge list write is exact") {
    Graph p3 = make_graph(3, {{1, 2}, {0, 1}});
    CHECK(to_edge_list(p3) == "3 2\n0 1\n1 2\n");
    CHECK(to_edge_list(make_graph(1, {})) == "1 0\n");
}

TEST_CASE("edge list parse round trip") {
    Graph g = make_graph(5, {{0, 1}, {0, 4}, {2, 3}});
    std::istringstream in(to_edge_list(g));
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge list comments and blanks") {
    std::istringstream in("# a triangle\n3 3\n0 1\n\n# middle comment\n1 2\n0 2\n");
    Graph g = read_edge_list(in, "t");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("edge list diagnostics carry line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in, "bad");
    };
    CHECK_THROWS_WITH_AS(parse("3 1\n0 x\n"), "bad:2: expected two integers (u v), got \"0 x\"",
                         ValidationError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), ValidationError);        // too few edges
    CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ValidationError);   // too many edges
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), ValidationError);        // u < v violated
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), ValidationError);        // out of range
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ValidationError);   // duplicate edge
    CHECK_THROWS_AS(parse(""), ValidationError);
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/file.txt"), ValidationError);
}
