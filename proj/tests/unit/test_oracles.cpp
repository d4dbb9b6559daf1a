#include "doctest.h"

#include "dynfpt/oracles.hpp"
#include "streams.hpp"

using namespace dynfpt;
using namespace dynfpt::oracle;
using dynfpt::testing::from_edges;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("oracle examples") {
  CHECK(brute_vc(complete(3)) == 2);
  CHECK(brute_cvd(from_edges(3, {{0, 1}, {1, 2}})) == 1);
  CHECK(brute_chromatic(cycle(5)) == 3);
  CHECK(brute_chromatic(Graph(0)) == 0);
  CHECK(brute_fvs(cycle(4), VertexSet{0}) == std::size_t{1});
  CHECK_FALSE(brute_fvs(cycle(4), VertexSet{}));
}

TEST_CASE("oracles on closed-form families") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(brute_vc(complete(n)) == static_cast<std::size_t>(n - 1));
    CHECK(brute_chromatic(complete(n)) == static_cast<std::size_t>(n));
    if (n >= 3) CHECK(brute_fvs(cycle(n)) == 1);
  }
  Graph clusters = from_edges(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {6, 7}, {6, 8}, {7, 8}});
  CHECK(brute_cvd(clusters) == 0);
  CHECK(brute_cvd_upto(clusters, 0) == std::size_t{0});
  CHECK_FALSE(brute_cvd_upto(from_edges(3, {{0, 1}, {1, 2}}), 0));

  // Two disjoint 10-cycles on 20 vertices, past the exhaustive budget.
  Graph cycles(20);
  for (Vertex v = 0; v < 10; ++v) {
    cycles.add_edge(v, (v + 1) % 10);
    cycles.add_edge(10 + v, 10 + (v + 1) % 10);
  }
  VertexSet all(20);
  for (Vertex v = 0; v < 20; ++v) all[v] = v;
  CHECK(brute_fvs_upto(cycles, 3, all) == std::size_t{2});
  CHECK_FALSE(brute_fvs_upto(cycles, 1, all));
  CHECK_FALSE(brute_fvs_upto(cycles, 3, VertexSet{0, 1, 2}));
}

TEST_CASE("oracles refuse oversized inputs") {
  try {
    brute_vc(Graph(13));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  CHECK_THROWS_AS(brute_chromatic(Graph(11)), Error);
  CHECK_THROWS_AS(brute_fvs(Graph(11)), Error);
}

TEST_CASE("naive reduction") {
  Multigraph path = to_multigraph(from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(naive_reduce(path, VertexSet{}).vertices.empty());

  // Cycle 0-1-2-3 through the protected vertex 0 becomes a loop on 0.
  Multigraph loop = naive_reduce(to_multigraph(cycle(4)), VertexSet{0});
  CHECK(loop.vertices == VertexSet{0});
  CHECK(loop.multiplicity(0, 0) == 1);

  // K4 has all degrees 3 and is already reduced.
  Multigraph k4 = to_multigraph(complete(4));
  CHECK(naive_reduce(k4, VertexSet{}) == k4);

  Multigraph without = to_multigraph(complete(4), VertexSet{3});
  CHECK(without.vertices == VertexSet{0, 1, 2});
  CHECK(without.edge_count() == 3);
}
