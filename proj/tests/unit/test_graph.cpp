#include "doctest.h"

#include "dynfpt/graph.hpp"
#include "streams.hpp"

using namespace dynfpt;
using dynfpt::testing::from_edges;

TEST_CASE("new graphs have isolated vertices") {
  Graph empty(0);
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);
  Graph g(5);
  CHECK(g.vertex_count() == 5);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("apply_edge inserts, rejects duplicates and deletes") {
  Graph g(3);
  g.apply(EdgeOp::insert(0, 1));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  try {
    g.apply(EdgeOp::insert(1, 0));
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateEdge);
  }
  g.apply(EdgeOp::erase(0, 1));
  CHECK(g.edge_count() == 0);
  CHECK(g.edges().empty());
}

TEST_CASE("invalid edge operations leave the graph unchanged") {
  Graph g = from_edges(3, {{0, 1}});
  const Graph before = g;
  auto code_of = [&](EdgeOp op) {
    try {
      g.apply(op);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidOp;
  };
  CHECK(code_of(EdgeOp::insert(2, 2)) == Errc::SelfLoop);
  CHECK(code_of(EdgeOp::insert(0, 3)) == Errc::OutOfRange);
  CHECK(code_of(EdgeOp::erase(1, 2)) == Errc::MissingEdge);
  CHECK(g == before);
}

TEST_CASE("induced subgraphs keep a map back to original ids") {
  Graph tri = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const VertexSet s{0, 1};
  auto sub = tri.induced(s);
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.original == std::vector<Vertex>{0, 1});

  CHECK(tri.induced(VertexSet{}).graph.vertex_count() == 0);

  Graph path = from_edges(3, {{0, 1}, {1, 2}});
  const VertexSet ends{0, 2};
  auto split = path.induced(ends);
  CHECK(split.graph.edge_count() == 0);
  CHECK(split.to_original(VertexSet{1}) == VertexSet{2});
  CHECK_THROWS_AS(path.induced(VertexSet{0, 7}), Error);
}

TEST_CASE("find_induced_p3 examples") {
  auto p = find_induced_p3(from_edges(3, {{0, 1}, {1, 2}}));
  REQUIRE(p);
  CHECK(*p == P3{0, 1, 2});
  CHECK_FALSE(find_induced_p3(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(find_induced_p3(from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("find_induced_p3 is absent exactly on cluster graphs, all graphs up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
      }
      // Components by label propagation, then a clique check per component.
      std::vector<int> comp(n);
      for (int v = 0; v < n; ++v) comp[v] = v;
      for (bool moved = true; moved;) {
        moved = false;
        for (auto [u, v] : g.edges()) {
          const int m = std::min(comp[u], comp[v]);
          if (comp[u] != m || comp[v] != m) comp[u] = comp[v] = m, moved = true;
        }
      }
      bool cluster = true;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (comp[u] == comp[v] && !g.has_edge(u, v)) cluster = false;
        }
      }
      REQUIRE(find_induced_p3(g).has_value() == !cluster);
      REQUIRE(is_cluster_graph(g) == cluster);
    }
  }
}

TEST_CASE("replaying a stream matches rebuilding from the final edge list") {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    dynfpt::testing::StreamGen gen(12, seed);
    Graph live(12);
    for (int i = 0; i < 80; ++i) live.apply(gen.next());
    Graph rebuilt(12);
    for (auto [u, v] : live.edges()) rebuilt.add_edge(u, v);
    CHECK(live == rebuilt);
    CHECK(live.edge_count() == rebuilt.edge_count());
  }
}

TEST_CASE("solution checkers") {
  Graph tri = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_vertex_cover(tri, VertexSet{0, 1}));
  CHECK_FALSE(is_vertex_cover(tri, VertexSet{0}));
  CHECK(is_cluster_deletion(tri, VertexSet{}));
  CHECK_FALSE(is_feedback_vertex_set(tri, VertexSet{}));
  CHECK(is_feedback_vertex_set(tri, VertexSet{2}));
}
