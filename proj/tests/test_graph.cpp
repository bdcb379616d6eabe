#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "r0net/graph.hpp"

using r0net::Graph;

TEST_CASE("edges are undirected and deduplicated") {
    Graph g(4);
    REQUIRE(g.add_edge(0, 1));
    REQUIRE_FALSE(g.add_edge(1, 0)); // same edge
    REQUIRE(g.add_edge(1, 2));
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 0));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(3) == 0);
    REQUIRE(g.validate());
}

TEST_CASE("self-loops and bad nodes are rejected") {
    Graph g(3);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), r0net::ParameterError);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), r0net::ParameterError);
    REQUIRE_THROWS_AS(g.add_edge(-1, 0), r0net::ParameterError);
    REQUIRE_THROWS_AS(g.degree(5), r0net::ParameterError);
    REQUIRE_THROWS_AS(Graph(0), r0net::ParameterError);
}

TEST_CASE("remove_edge keeps adjacency consistent") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    REQUIRE(g.remove_edge(1, 2));
    REQUIRE_FALSE(g.remove_edge(1, 2));
    REQUIRE_FALSE(g.has_edge(1, 2));
    REQUIRE(g.degree(1) == 1);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.validate());
}

TEST_CASE("edges come out sorted with u < v") {
    Graph g(5);
    g.add_edge(4, 0);
    g.add_edge(3, 1);
    g.add_edge(2, 0);
    const auto e = g.edges();
    REQUIRE(e == std::vector<std::pair<int, int>>{{0, 2}, {0, 4}, {1, 3}});
}

TEST_CASE("graph equality is structural") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    b.add_edge(1, 2);
    b.add_edge(1, 0);
    REQUIRE(a == b);
    Graph c(3);
    c.add_edge(0, 1);
    REQUIRE_FALSE(a == c);
}

TEST_CASE("is_connected distinguishes paths from split graphs") {
    REQUIRE(r0net::is_connected(oracles::path_graph(10)));
    REQUIRE(r0net::is_connected(oracles::complete_graph(5)));
    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    REQUIRE_FALSE(r0net::is_connected(split));
    REQUIRE(r0net::is_connected(Graph(1))); // single node
}
