#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "core/graph.hpp"
#include "core/intops.hpp"
#include "test_util.hpp"

using betti::Graph;

TEST_CASE("graph construction and validation") {
    Graph g(4);
    g.add_edge(1, 2);
    CHECK(g.has_edge(2, 1));
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(1) == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(1, 5), std::out_of_range);
    CHECK_THROWS_AS(Graph(0), std::out_of_range);
    CHECK_THROWS_AS(Graph(26), std::out_of_range);
}

TEST_CASE("component counting") {
    Graph c4 = testutil::cycle(4);
    CHECK(betti::component_count(c4, 0b0101) == 2); // opposite vertices 1 and 3
    CHECK(betti::component_count(c4, 0) == 0);
    CHECK(betti::component_count(testutil::complete(5), 0b11111) == 1);
    CHECK(betti::component_count(testutil::complete(5), 0b10010) == 1);
    Graph two_edges = Graph::from_edges(4, {{1, 2}, {3, 4}});
    CHECK(betti::component_count(two_edges, 0b0111) == 2); // {1,2,3}
    CHECK(betti::component_count(two_edges, 0b1111) == 2);
}

TEST_CASE("chordality basics") {
    CHECK_FALSE(betti::is_chordal(testutil::cycle(4)));
    CHECK_FALSE(betti::is_chordal(testutil::cycle(5)));
    CHECK(betti::is_chordal(testutil::path(6)));
    Graph k4_minus = testutil::complete(4);
    // no removal API: rebuild K4 without one edge
    Graph g(4);
    for (auto [u, v] : k4_minus.edges())
        if (!(u == 1 && v == 3)) g.add_edge(u, v);
    CHECK(betti::is_chordal(g));
    CHECK(betti::is_chordal(testutil::complete(7)));
    CHECK(betti::is_chordal(Graph(5))); // no edges
}

TEST_CASE("chordality agrees with the induced-cycle oracle on all 6-vertex graphs") {
    for (std::uint32_t code = 0; code < (1u << 15); ++code) {
        Graph g(6);
        int bit = 0;
        for (int u = 1; u <= 6; ++u)
            for (int v = u + 1; v <= 6; ++v, ++bit)
                if ((code >> bit) & 1u) g.add_edge(u, v);
        CHECK(betti::is_chordal(g) == testutil::oracle_chordal(g));
    }
}

TEST_CASE("froberg examples") {
    CHECK(betti::froberg_vector(Graph(6)) == std::vector<std::int64_t>{15, 40, 45, 24, 5});
    Graph k4_plus_isolated(5);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) k4_plus_isolated.add_edge(u, v);
    CHECK(betti::froberg_vector(k4_plus_isolated) == std::vector<std::int64_t>{4, 6, 4, 1});
    CHECK(betti::froberg_vector(testutil::path(4)) == std::vector<std::int64_t>{3, 2, 0});
    CHECK(betti::froberg_vector(testutil::complete(6)) ==
          std::vector<std::int64_t>{0, 0, 0, 0, 0});
    CHECK(betti::froberg_vector(Graph::from_edges(4, {{1, 2}, {3, 4}})) ==
          std::vector<std::int64_t>{4, 4, 1});
    CHECK(betti::froberg_vector(testutil::cycle(4)) == std::vector<std::int64_t>{2, 0, 0});
    CHECK(betti::froberg_vector(Graph(1)).empty());
}

TEST_CASE("froberg guard") {
    CHECK_THROWS_AS(betti::froberg_vector(Graph(23)), std::out_of_range);
}

TEST_CASE("froberg of trees and triangulations matches the closed forms") {
    std::mt19937 rng(42);
    for (int n = 2; n <= 9; ++n) {
        Graph tree = testutil::random_tree(n + 1, rng);
        std::vector<std::int64_t> omega = betti::froberg_vector(tree);
        for (int i = 1; i <= n; ++i)
            CHECK(omega[i - 1] == static_cast<std::int64_t>(i) * betti::binomial(n, i + 1));
    }
    for (int n = 3; n <= 9; ++n) {
        for (const Graph& tri : {testutil::fan(n + 1), testutil::snake(n + 1)}) {
            std::vector<std::int64_t> omega = betti::froberg_vector(tri);
            for (int i = 1; i <= n; ++i)
                CHECK(omega[i - 1] == static_cast<std::int64_t>(i) * betti::binomial(n - 1, i + 1));
        }
    }
}

TEST_CASE("move_vertex on the worked examples") {
    // path 1-2-3-4, moving 3's private neighbors onto 2 gives a star at 2
    Graph star = betti::move_vertex(testutil::path(4), 3, 2);
    CHECK(star.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});

    Graph moved = betti::move_vertex(Graph::from_edges(4, {{1, 2}, {3, 4}}), 1, 3);
    CHECK(moved.edges() == std::vector<std::pair<int, int>>{{2, 3}, {3, 4}});
    CHECK(moved.degree(1) == 0);

    // nothing to move when every neighbor of v is already w's neighbor
    Graph k3 = testutil::complete(3);
    CHECK(betti::move_vertex(k3, 1, 2) == k3);

    CHECK_THROWS_AS(betti::move_vertex(k3, 2, 2), std::invalid_argument);
}

TEST_CASE("move_vertex preserves edge count") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(k, 0.4, rng);
        int v = 1 + static_cast<int>(rng() % k);
        int w = 1 + static_cast<int>(rng() % k);
        if (v == w) continue;
        CHECK(betti::move_vertex(g, v, w).edge_count() == g.edge_count());
    }
}

TEST_CASE("rewrites preserve chordality and the froberg vector") {
    // exhaustive over all labeled chordal graphs on <= 6 vertices and all
    // admissible ordered pairs; the connected case needs vw in E, the
    // disconnected case needs v and w in different components
    for (int k = 2; k <= 6; ++k) {
        int bits = k * (k - 1) / 2;
        for (std::uint32_t code = 0; code < (1u << bits); ++code) {
            Graph g(k);
            int bit = 0;
            for (int u = 1; u <= k; ++u)
                for (int v = u + 1; v <= k; ++v, ++bit)
                    if ((code >> bit) & 1u) g.add_edge(u, v);
            if (!betti::is_chordal(g)) continue;
            std::vector<std::int64_t> omega = betti::froberg_vector(g);
            bool connected = g.is_connected();
            for (int v = 1; v <= k; ++v)
                for (int w = 1; w <= k; ++w) {
                    if (v == w) continue;
                    bool applicable =
                        connected ? g.has_edge(v, w)
                                  : (g.component_of(v, g.full_set()) &
                                     (1u << (w - 1))) == 0;
                    if (!applicable) continue;
                    Graph moved = betti::move_vertex(g, v, w);
                    CHECK(betti::is_chordal(moved));
                    CHECK(betti::froberg_vector(moved) == omega);
                }
        }
    }
}

TEST_CASE("graph text format round trip") {
    Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(betti::format_graph_text(g) == "n 4\n1 2\n2 3\n3 4\n");
    CHECK(betti::parse_graph_text(betti::format_graph_text(g)) == g);
    CHECK(betti::parse_graph_text("n 3") == Graph(3));

    CHECK_THROWS_AS(betti::parse_graph_text("3\n1 2\n"), betti::ParseError);
    CHECK_THROWS_AS(betti::parse_graph_text("n 3\n1\n"), betti::ParseError);
    CHECK_THROWS_AS(betti::parse_graph_text("n 3\n1 4\n"), betti::ParseError);
    CHECK_THROWS_AS(betti::parse_graph_text("n 3\n1 1\n"), betti::ParseError);
    CHECK_THROWS_AS(betti::parse_graph_text("n 3\n1 x\n"), betti::ParseError);
    CHECK_THROWS_AS(betti::parse_graph_text("n 0\n"), betti::ParseError);
}

TEST_CASE("graph6 format") {
    CHECK(betti::format_graph6(testutil::complete(4)) == "C~");
    CHECK(betti::format_graph6(Graph(5)) == "D??");
    CHECK(betti::parse_graph6("C~") == testutil::complete(4));
    CHECK(betti::parse_graph6(">>graph6<<C~\n") == testutil::complete(4));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_graph(k, 0.5, rng);
        CHECK(betti::parse_graph6(betti::format_graph6(g)) == g);
    }

    CHECK_THROWS_AS(betti::parse_graph6(""), betti::ParseError);
    CHECK_THROWS_AS(betti::parse_graph6("C"), betti::ParseError);
}

TEST_CASE("induced subgraphs relabel in order") {
    Graph g = testutil::path(5);
    Graph sub = g.induced(0b11010); // vertices {2, 4, 5}
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edges() == std::vector<std::pair<int, int>>{{2, 3}}); // old 4-5
    CHECK(g.without_vertex(3).edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}
