#include "lightspan/graph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "lightspan/numeric.hpp"
#include "lightspan/shortest_paths.hpp"
#include "oracle.hpp"

using namespace lightspan;

namespace {

Graph path3() { return Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

Graph path4() { return Graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}); }

Graph cycle4() {
  return Graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("minimal connected graph") {
    Graph g(2, {{0, 1, 1.0}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.total_weight() == 1.0);
  }

  TEST_CASE("parallel edges collapse to the lighter one") {
    Graph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {0, 2, 5.0}});
    CHECK(g.edge_count() == 3);
    int id = g.find_edge(0, 2);
    REQUIRE(id >= 0);
    CHECK(g.edge(id).weight == 1.0);
  }

  TEST_CASE("disconnected input is rejected") {
    CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}}), DisconnectedGraph);
  }

  TEST_CASE("bad edges are rejected") {
    CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), InvalidVertex);
    CHECK_THROWS_AS(Graph(2, {{0, 0, 1.0}, {0, 1, 1.0}}), InvalidVertex);
    CHECK_THROWS_AS(Graph(2, {{0, 1, -1.0}}), NegativeWeight);
  }

  TEST_CASE("mst of a weighted triangle") {
    Graph g(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}});
    auto tree = mst(g);
    CHECK(tree.edge_ids() == std::vector<int>{0, 1});
    CHECK(tree.weight() == 3.0);
  }

  TEST_CASE("mst tie-breaking on the unit 4-cycle drops the highest id") {
    // frozen from the enumeration oracle: {0,1,2} dominates the other three
    // spanning trees under the (weight, id) order
    Graph g = cycle4();
    auto tree = mst(g);
    CHECK(tree.edge_ids() == std::vector<int>{0, 1, 2});
    auto trees = oracle::all_spanning_trees(g);
    CHECK(trees.size() == 4);
    for (const auto& other : trees)
      CHECK(oracle::dominates(g, tree.edge_ids(), other));
  }

  TEST_CASE("mst determinism") {
    for (std::uint64_t seed : {1u, 7u, 23u}) {
      Graph g = oracle::random_connected_graph(12, 18, seed);
      Graph h = oracle::random_connected_graph(12, 18, seed);
      CHECK(mst(g).edge_ids() == mst(h).edge_ids());
    }
  }

  TEST_CASE("mst optimality and domination vs exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      int n = 4 + static_cast<int>(seed % 4);
      Graph g = oracle::random_connected_graph(n, n, seed);
      auto tree = mst(g);
      auto trees = oracle::all_spanning_trees(g);
      REQUIRE(!trees.empty());
      double best = kInf;
      for (const auto& t : trees)
        best = std::min(best, oracle::tree_weight(g, t));
      CHECK(approx_eq(tree.weight(), best));
      for (const auto& t : trees)
        CHECK(oracle::dominates(g, tree.edge_ids(), t));
    }
  }

  TEST_CASE("shortest paths on a path") {
    Graph g = path3();
    VertexId zero = 0;
    auto field = shortest_paths(g, std::span<const VertexId>(&zero, 1));
    CHECK(field.dist == std::vector<double>{0.0, 1.0, 2.0});
    std::vector<VertexId> both{0, 2};
    auto multi = shortest_paths(g, both);
    CHECK(multi.dist == std::vector<double>{0.0, 1.0, 0.0});
  }

  TEST_CASE("shortest paths reject an empty source set") {
    Graph g = path3();
    CHECK_THROWS_AS(shortest_paths(g, std::span<const VertexId>{}),
                    EmptySourceSet);
  }

  TEST_CASE("shortest paths match the cubic oracle") {
    // includes the P4 = C4-minus-one-edge case
    Graph p4 = path4();
    VertexId zero = 0;
    auto field = shortest_paths(p4, std::span<const VertexId>(&zero, 1));
    CHECK(field.dist == std::vector<double>{0.0, 1.0, 2.0, 3.0});

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      Graph g = oracle::random_connected_graph(50, 120, seed);
      auto expect = oracle::apsp(g);
      for (VertexId s : {0, 7, 49}) {
        auto got = shortest_paths(g, std::span<const VertexId>(&s, 1));
        for (int v = 0; v < g.vertex_count(); ++v)
          CHECK(approx_eq(got.dist[v], expect[s][v]));
      }
    }
  }

  TEST_CASE("predecessor forest is rooted at the sources") {
    Graph g = oracle::random_connected_graph(30, 40, 5);
    std::vector<VertexId> sources{2, 11};
    auto field = shortest_paths(g, sources);
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto path = field.path_edges_to(v);
      double total = 0.0;
      VertexId cursor = v;
      for (int e : path) {
        total += g.edge(e).weight;
        cursor = g.edge(e).other(cursor);
      }
      CHECK(approx_eq(total, field.dist[v]));
      CHECK((cursor == 2 || cursor == 11));
    }
  }

  TEST_CASE("subgraph distances dominate the graph's") {
    Graph g = oracle::random_connected_graph(24, 40, 9);
    auto tree = mst(g);
    auto dg = oracle::apsp(g);
    auto mask = tree.mask();
    auto dh = oracle::apsp(g, &mask);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(approx_geq(dh[u][v], dg[u][v]));
  }

  TEST_CASE("subgraph weight is order independent") {
    Graph g = oracle::random_connected_graph(10, 10, 3);
    Subgraph a(g);
    Subgraph b(g);
    a.add_edge(0);
    a.add_edge(5);
    a.add_edge(2);
    b.add_edge(2);
    b.add_edge(0);
    b.add_edge(5);
    CHECK(a.weight() == b.weight());
  }
}
