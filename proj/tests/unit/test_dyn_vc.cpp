#include "doctest.h"

#include "dynfpt/dyn_vc.hpp"
#include "dynfpt/oracles.hpp"
#include "dynfpt/solvers.hpp"
#include "streams.hpp"

using namespace dynfpt;

TEST_CASE("dynamic vertex cover examples") {
  DynVc single(2);
  single.update(EdgeOp::insert(0, 1));
  CHECK(single.approximate().size() <= 2);
  CHECK(is_vertex_cover(single.graph(), single.approximate()));

  DynVc star(5);
  for (Vertex leaf = 1; leaf <= 4; ++leaf) star.update(EdgeOp::insert(0, leaf));
  CHECK(star.approximate().size() <= 2);
  CHECK(star.query() == VertexSet{0});

  DynVc tri(3);
  tri.update(EdgeOp::insert(0, 1));
  tri.update(EdgeOp::insert(1, 2));
  tri.update(EdgeOp::insert(0, 2));
  CHECK(tri.query().size() == 2);
  tri.update(EdgeOp::erase(0, 2));
  CHECK(is_vertex_cover(tri.graph(), tri.approximate()));
  CHECK(tri.approximate().size() <= 2);
}

TEST_CASE("dynamic vertex cover queries") {
  CHECK(DynVc(4).query().empty());
  DynVc st(7);
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}}) {
    st.update(EdgeOp::insert(u, v));
  }
  CHECK(st.query().size() == 4);
}

TEST_CASE("dynamic vertex cover tracks the optimum on random streams") {
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    dynfpt::testing::StreamGen gen(12, seed);
    DynVc st(12);
    for (int step = 0; step < 40; ++step) {
      st.update(gen.next());
      const std::size_t opt = oracle::brute_vc(st.graph());
      const VertexSet x = st.approximate();
      REQUIRE(is_vertex_cover(st.graph(), x));
      REQUIRE(x.size() <= 2 * opt);

      const Kernel k = st.kernel();
      REQUIRE(k.reduced.graph.vertex_count() <= x.size() * (x.size() + 1));
      REQUIRE(k.reduced.graph.edge_count() <= x.size() * x.size());
      REQUIRE(k.forced.size() + vc_exact(k.reduced.graph)->size() == opt);

      const VertexSet q = st.query();
      REQUIRE(q.size() == opt);
      REQUIRE(is_vertex_cover(st.graph(), q));
    }
  }
}

TEST_CASE("query size does not depend on which endpoint joined the cover") {
  // Same edge set inserted in two orders with swapped endpoint roles.
  DynVc a(6), b(6);
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}};
  for (auto [u, v] : edges) a.update(EdgeOp::insert(u, v));
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) b.update(EdgeOp::insert(it->second, it->first));
  CHECK(a.query().size() == b.query().size());
}
