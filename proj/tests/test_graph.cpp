#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "matchpoly/graph.hpp"

using namespace matchpoly;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 known encodings") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete_graph(4));

    Graph single = parse_graph6("@");
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);

    Graph empty = parse_graph6("?");
    CHECK(empty.order() == 0);

    // 5 vertices, edges 0-4,1-4,2-4,3-4 (the star K_{1,4})
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(4) == 4);
    for (int v = 0; v < 4; ++v) CHECK(star.degree(v) == 1);

    CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
    CHECK(serialize_graph6(complete_graph(4)) == "C~");
    CHECK(serialize_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_n(0, 62);
    std::uniform_real_distribution<double> pick_p(0.0, 1.0);
    for (int iter = 0; iter < 300; ++iter) {
        Graph g = random_graph(rng, pick_n(rng), pick_p(rng));
        std::string g6 = serialize_graph6(g);
        CHECK(parse_graph6(g6) == g);
        // re-serialization is stable
        CHECK(serialize_graph6(parse_graph6(g6)) == g6);
    }
}

TEST_CASE("graph6 error reporting") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);   // n > 62 unsupported
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);     // truncated payload
    CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);   // trailing bytes
    CHECK_THROWS_AS(parse_graph6("C\x1f"), Graph6Error); // byte below offset
    CHECK_THROWS_AS(parse_graph6("A"), Graph6Error);

    try {
        parse_graph6("C!");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.pos == 1);
        CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
    }

    // padding bits must be zero: "AG" sets a bit past the single triangle slot
    CHECK_THROWS_AS(parse_graph6("AG"), Graph6Error);
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("A?").edge_count() == 0);
}

TEST_CASE("vertex and edge deletion") {
    Graph k4 = complete_graph(4);
    Graph k3 = k4.delete_vertices({0});
    CHECK(k3 == complete_graph(3));

    Graph c5 = cycle_graph(5);
    Graph p4 = c5.delete_vertices({0});
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(is_regular(p4) == std::nullopt);

    CHECK(c5.delete_vertices({}) == c5);
    CHECK(c5.delete_vertices({0, 1, 2, 3, 4}).order() == 0);

    Graph c5_minus = c5.delete_edge(0, 1);
    CHECK(c5_minus.edge_count() == 4);
    CHECK_FALSE(c5_minus.has_edge(0, 1));
    CHECK_FALSE(c5_minus.has_edge(1, 0));
    CHECK(c5.has_edge(0, 1));  // original untouched
}

TEST_CASE("induced subgraph relabels in list order") {
    Graph c5 = cycle_graph(5);
    Graph h = c5.induced({1, 2, 3});
    CHECK(h.order() == 3);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 2));
}

TEST_CASE("regularity detection") {
    CHECK(is_regular(petersen_graph()) == 3);
    CHECK(is_regular(complete_graph(4)) == 3);
    CHECK(is_regular(cycle_graph(6)) == 2);
    CHECK(is_regular(Graph(3)) == 0);
    CHECK(is_regular(path_graph(4)) == std::nullopt);
    CHECK(is_regular(complete_bipartite(3, 3)) == 3);
    CHECK(is_regular(complete_bipartite(2, 3)) == std::nullopt);
}

TEST_CASE("connected components") {
    CHECK(connected_components(petersen_graph()).size() == 1);

    Graph g(7);  // triangle 0-1-2, edge 4-5, isolated 3 and 6
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(4, 5);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    CHECK(comps[3] == std::vector<int>{6});
}

TEST_CASE("fixed graphs") {
    CHECK(petersen_graph().order() == 10);
    CHECK(petersen_graph().edge_count() == 15);
    CHECK(prism_graph().order() == 6);
    CHECK(prism_graph().edge_count() == 9);
    CHECK(is_regular(prism_graph()) == 3);
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK_THROWS(cycle_graph(2));
    CHECK(path_graph(1).order() == 1);
    CHECK(complete_bipartite(4, 4).edge_count() == 16);

    auto edges = complete_graph(3).edges();
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == Edge{0, 1});

    CHECK_THROWS(Graph(63));
    CHECK_THROWS(Graph(3).add_edge(0, 0));
    CHECK_THROWS(Graph(3).add_edge(0, 3));
}
