#include <doctest.h>

#include <sstream>

#include "folb/axioms.hpp"
#include "folb/corpus.hpp"
#include "folb/errors.hpp"
#include "folb/families.hpp"
#include "folb/graph_io.hpp"
#include "folb/metric.hpp"
#include "folb/subgraph.hpp"
#include "oracles.hpp"

using namespace folb;

TEST_CASE("distances on small named graphs") {
  const MetricOracle p3(families::path(3));
  CHECK(p3.dist(0, 2) == 2);
  CHECK(p3.between(0, 1, 2));
  CHECK(MetricOracle(families::cycle(6)).dist(0, 3) == 3);

  const MetricOracle q3(families::hypercube(3));
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = 0; v < 8; ++v) CHECK(q3.dist(u, v) == oracle::popcount(unsigned(u ^ v)));
}

TEST_CASE("intervals") {
  CHECK(to_list(MetricOracle(families::path(3)).interval(0, 2)) == std::vector<Vertex>{0, 1, 2});
  CHECK(to_list(MetricOracle(families::cycle(4)).interval(0, 2)) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(to_list(MetricOracle(families::cycle(5)).interval(0, 2)) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("metric invariants on the exhaustive corpus") {
  for (const Graph& g : corpus::connected_graphs_up_to(6)) {
    const MetricOracle m(g);
    const MetricOracle dense(g, true);
    const auto d = oracle::distances(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        REQUIRE(m.dist(u, v) == d[u][v]);
        CHECK(edge_from_betweenness(m, u, v) == g.adjacent(u, v));
        CHECK(m.interval(u, v) == m.interval(v, u));
        CHECK(m.interval(u, v) == dense.interval(u, v));
        for (Vertex x = 0; x < g.order(); ++x) {
          if (!m.between(u, x, v)) continue;
          for (Vertex y = 0; y < g.order(); ++y)
            if (m.between(u, y, x)) CHECK(m.between(u, y, v));
        }
      }
  }
}

TEST_CASE("disconnected graphs are rejected") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(MetricOracle{g}, DisconnectedGraph);
}

TEST_CASE("axiom checker") {
  CHECK(check_axioms(TernaryRelation::from_metric(MetricOracle(families::cycle(5)))).empty());

  TernaryRelation loop(2);
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      loop.insert(u, u, v);
      loop.insert(u, v, v);
    }
  loop.insert(0, 1, 0);
  bool ib3 = false;
  for (const auto& v : check_axioms(loop)) ib3 |= v.axiom == "IB3";
  CHECK(ib3);

  const auto empty = check_axioms(TernaryRelation(2));
  REQUIRE(!empty.empty());
  CHECK(empty.front().axiom == "IB1");
}

TEST_CASE("subgraph searches") {
  using namespace families;
  CHECK_FALSE(find_induced(cycle(4), complete(3)));
  CHECK(find_induced(complete_bipartite(2, 3), cycle(4)));
  CHECK(find_induced(octahedron(3), k4_minus()));
  CHECK(find_isometric(cycle(6), path(3)));
  CHECK(find_isometric(hypercube(3), cycle(4)));
  CHECK_FALSE(find_isometric(complete(4), cycle(4)));
  CHECK_THROWS_AS(find_isometric(cycle(5), Graph(2)), DisconnectedPattern);
}

TEST_CASE("isometric copies are induced, and searches ignore labels") {
  const Graph patterns[] = {families::cycle(4), families::path(3), families::k4_minus(), families::cycle(5)};
  for (const Graph& g : corpus::connected_graphs(6)) {
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = (i * 5 + 1) % g.order();
    const Graph h = g.relabeled(perm);
    for (const Graph& p : patterns) {
      if (find_isometric(g, p)) CHECK(find_induced(g, p));
      CHECK(bool(find_induced(g, p)) == bool(find_induced(h, p)));
      CHECK(bool(find_isometric(g, p)) == bool(find_isometric(h, p)));
    }
  }
}

TEST_CASE("graph text format round trip") {
  const Graph g = families::house();
  std::stringstream s;
  write_graph(s, g);
  CHECK(read_graph(s) == g);
  CHECK_THROWS_AS(parse_graph("3 1\n0 0\n"), Error);
  CHECK(load_graph("cycle(5)").order() == 5);
}
