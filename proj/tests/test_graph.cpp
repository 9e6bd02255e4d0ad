#include <doctest.h>

#include <stdexcept>

#include "tdc/graph.hpp"
#include "test_util.hpp"

using namespace tdc;

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.empty());
  s.add(0);
  s.add(69);
  s.add(33);
  CHECK(s.count() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(1));
  s.remove(33);
  CHECK(s.count() == 2);
  CHECK(s.to_vector() == std::vector<int>{0, 69});
  CHECK(s.first() == 0);

  auto t = VertexSet::of(70, {0, 5});
  CHECK_FALSE(t.is_subset_of(s));
  CHECK(t.intersects(s));
  t.remove(5);
  CHECK(t.is_subset_of(s));
  CHECK(VertexSet::of(70, {0, 69}) == s);
}

TEST_CASE("graph construction and degrees") {
  Graph g = cycle(5);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.has_edge(0, 4));
  CHECK(g.has_edge(4, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(3) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 2);
  CHECK(g.neighbors(0) == VertexSet::of(5, {1, 4}));
  CHECK(g.closed_neighborhood(0) == VertexSet::of(5, {0, 1, 4}));

  g.add_edge(0, 2);
  g.add_edge(0, 2);  // idempotent
  CHECK(g.edge_count() == 6);
  CHECK(g.degree(0) == 3);

  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
}

TEST_CASE("standard generators") {
  CHECK(path(1).edge_count() == 0);
  CHECK(path(4).edge_count() == 3);
  CHECK(complete(6).edge_count() == 15);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);

  // K_{a,a} minus a perfect matching: a(a-1) edges, all degrees a-1
  Graph kb = complete_bipartite_minus_matching(3);
  CHECK(kb.order() == 6);
  CHECK(kb.edge_count() == 6);
  CHECK(kb.max_degree() == 2);
  CHECK_FALSE(kb.has_edge(0, 3));
  CHECK(kb.has_edge(0, 4));

  Graph cor = corona(cycle(3));
  CHECK(cor.order() == 6);
  CHECK(cor.edge_count() == 6);
  CHECK(cor.degree(3) == 1);
  CHECK(cor.has_edge(0, 3));
  CHECK(support_vertices(cor) == VertexSet::of(6, {0, 1, 2}));
}

TEST_CASE("vertex amalgamation") {
  // two triangles glued at a vertex: bowtie
  Graph bow = vertex_amalgamation(complete(3), 0, complete(3), 2);
  CHECK(bow.order() == 5);
  CHECK(bow.edge_count() == 6);
  CHECK(bow.degree(0) == 4);
  // amalgam is vertex 0; g1 remainder keeps its relative order, then g2
  CHECK(bow.has_edge(1, 2));
  CHECK(bow.has_edge(3, 4));
  CHECK_FALSE(bow.has_edge(1, 3));
  CHECK_THROWS_AS(vertex_amalgamation(complete(3), 3, complete(3), 0), std::out_of_range);
}

TEST_CASE("induced subgraph and deletion") {
  Graph g = cycle(6);
  Graph h = induced_subgraph(g, VertexSet::of(6, {0, 1, 2, 3}));
  CHECK(h.order() == 4);
  CHECK(h.edge_count() == 3);  // path 0-1-2-3
  Graph d = delete_vertex(g, 3);
  CHECK(d.order() == 5);
  CHECK(d.edge_count() == 4);
  CHECK(d.has_edge(2, 3) == false);  // old 2-3 edge gone, old 4 is now 3
}

TEST_CASE("bipartite minus matching is (a-1)-regular") {
  for (int a = 1; a <= 10; ++a) {
    Graph g = complete_bipartite_minus_matching(a);
    CHECK(g.order() == 2 * a);
    CHECK(g.edge_count() == a * (a - 1));
    CHECK(g.max_degree() == a - 1);
    CHECK(g.min_degree() == a - 1);
  }
}

TEST_CASE("vertex deletion agrees with the complement induced subgraph") {
  test_util::Lcg rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + rng.below(9);
    Graph g = test_util::random_graph(rng, n, 20 + rng.below(70));
    int v = rng.below(n);
    VertexSet rest(n);
    for (int u = 0; u < n; ++u)
      if (u != v) rest.add(u);
    CHECK(delete_vertex(g, v) == induced_subgraph(g, rest));
  }
}

TEST_CASE("components and connectivity") {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3, 4});
  CHECK(comps[2] == std::vector<int>{5});
  CHECK(comps[3] == std::vector<int>{6});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle(9)));
  CHECK(is_connected(empty_graph(1)));
  CHECK_FALSE(is_connected(empty_graph(2)));
}

TEST_CASE("wide graphs cross the 64 bit word boundary") {
  Graph g = cycle(130);
  CHECK(g.order() == 130);
  CHECK(g.edge_count() == 130);
  CHECK(g.has_edge(129, 0));
  CHECK(g.degree(64) == 2);
  CHECK(is_connected(g));
  auto n = g.neighbors(64);
  CHECK(n == VertexSet::of(130, {63, 65}));
  CHECK_FALSE(g.packed());
  CHECK(cycle(64).packed());
}
