#include "doctest.h"

#include <map>

#include "dynfpt/dyn_cvd_kernel.hpp"
#include "dynfpt/oracles.hpp"
#include "dynfpt/solvers.hpp"
#include "streams.hpp"

using namespace dynfpt;
using dynfpt::testing::from_edges;

namespace {

enum : Vertex { a, b, c, d, e, f, x, y };

// Clusters {a,b,c,d} and {e,f}; X = {x, y} with x ~ a, c and y ~ c, e, f.
DynCvdKernel figure_state() {
  Graph g = from_edges(8, {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}, {e, f},
                           {x, a}, {x, c}, {y, c}, {y, e}, {y, f}});
  return DynCvdKernel::with_solution(g, VertexSet{x, y});
}

std::vector<Vertex> items(const PSet& s) { return s.to_vector(); }

// Tables keyed by cluster contents instead of labels, so two structures with
// different label histories compare equal.
struct Canonical {
  std::set<std::vector<Vertex>> clusters;
  std::map<std::pair<Vertex, std::vector<Vertex>>, std::pair<std::vector<Vertex>, std::vector<Vertex>>> incidence;
  bool operator==(const Canonical&) const = default;
};

Canonical canonical(const DynCvdKernel& st) {
  Canonical out;
  for (ClusterLabel l : st.cluster_labels()) {
    out.clusters.insert(items(st.cluster(l)));
    for (Vertex v : items(st.cluster(l))) REQUIRE(st.label_of(v) == l);
  }
  for (Vertex xv : st.solution()) {
    for (ClusterLabel l : st.incident_labels(xv)) {
      const auto plus = items(st.plus(xv, l));
      const auto minus = items(st.minus(xv, l));
      REQUIRE_FALSE(plus.empty());
      out.incidence[{xv, items(st.cluster(l))}] = {plus, minus};
    }
  }
  return out;
}

}  // namespace

TEST_CASE("tables of the worked example") {
  DynCvdKernel st = figure_state();
  const ClusterLabel one = *st.label_of(a);
  const ClusterLabel two = *st.label_of(e);
  CHECK(st.incident_labels(x) == std::vector<ClusterLabel>{one});
  CHECK(st.incident_labels(y) == std::vector<ClusterLabel>{one, two});
  CHECK(items(st.plus(x, one)) == std::vector<Vertex>{a, c});
  CHECK(items(st.minus(x, one)) == std::vector<Vertex>{b, d});
  CHECK(items(st.plus(y, one)) == std::vector<Vertex>{c});
  CHECK(items(st.minus(y, one)) == std::vector<Vertex>{a, b, d});
  CHECK(items(st.plus(y, two)) == std::vector<Vertex>{e, f});
  CHECK(items(st.minus(y, two)).empty());
}

TEST_CASE("adding a vertex to X and removing it again") {
  DynCvdKernel st = figure_state();
  const Canonical before = canonical(st);
  const ClusterLabel one = *st.label_of(a);
  st.add_to_x(a);
  CHECK(items(st.cluster(one)) == std::vector<Vertex>{b, c, d});
  CHECK(items(st.plus(x, one)) == std::vector<Vertex>{c});
  CHECK(items(st.plus(a, one)) == std::vector<Vertex>{b, c, d});
  CHECK(items(st.minus(a, one)).empty());
  CHECK_THROWS_AS(st.add_to_x(a), Error);

  st.remove_from_x(a);
  CHECK(canonical(st) == before);
  CHECK(items(st.plus(x, one)) == std::vector<Vertex>{a, c});
  CHECK(items(st.minus(y, one)) == std::vector<Vertex>{a, b, d});
}

TEST_CASE("moves on singleton clusters") {
  DynCvdKernel st(3);
  const ClusterLabel l = *st.label_of(1);
  st.add_to_x(1);
  CHECK(st.incident_labels(1).empty());
  CHECK_THROWS_AS(st.cluster(l), Error);
  st.remove_from_x(1);
  CHECK(st.label_of(1).has_value());
  CHECK(*st.label_of(1) != l);
  CHECK(items(st.cluster(*st.label_of(1))) == std::vector<Vertex>{1});
  try {
    st.remove_from_x(1);
    FAIL("removed a free vertex");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotInX);
  }
}

TEST_CASE("an emptied incidence drops the label") {
  // x touches cluster {0,1,2} only through 0.
  Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}});
  DynCvdKernel st = DynCvdKernel::with_solution(g, VertexSet{3});
  CHECK(st.incident_labels(3).size() == 1);
  st.add_to_x(0);
  CHECK(st.incident_labels(3).empty());
}

TEST_CASE("removing a vertex adjacent to two clusters is rejected") {
  Graph g = from_edges(3, {{0, 1}, {1, 2}});
  DynCvdKernel st = DynCvdKernel::with_solution(g, VertexSet{1});
  try {
    st.remove_from_x(1);
    FAIL("accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::AssumptionViolated);
  }
  CHECK(st.solution() == VertexSet{1});
}

TEST_CASE("compression") {
  // One clique with a single clique vertex in X.
  Graph k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  DynCvdKernel clique = DynCvdKernel::with_solution(k4, VertexSet{2});
  clique.compress();
  CHECK(clique.solution().empty());

  // Center adjacent to |X| + 2 = 3 singleton clusters stays forced.
  Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  DynCvdKernel forced = DynCvdKernel::with_solution(star, VertexSet{0});
  CHECK(forced.kernel().forced == VertexSet{0});
  forced.compress();
  CHECK(forced.solution() == VertexSet{0});

  Graph p3 = from_edges(3, {{0, 1}, {1, 2}});
  DynCvdKernel small = DynCvdKernel::with_solution(p3, VertexSet{1});
  small.compress();
  CHECK(small.solution().size() <= 3);
  CHECK(is_cluster_deletion(small.graph(), small.solution()));
}

TEST_CASE("update examples") {
  DynCvdKernel p3(3);
  p3.update(EdgeOp::insert(0, 1));
  p3.update(EdgeOp::insert(1, 2));
  CHECK(p3.solution().size() <= 3);
  CHECK(is_cluster_deletion(p3.graph(), p3.solution()));
  CHECK(p3.query().size() == 1);
  p3.update(EdgeOp::erase(0, 1));
  CHECK(p3.solution().empty());
  CHECK(p3.query().empty());

  DynCvdKernel k5(5);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) {
      k5.update(EdgeOp::insert(u, v));
      CHECK(k5.solution().size() <= 3 * oracle::brute_cvd(k5.graph()));
    }
  }
  CHECK(k5.query().empty());
}

TEST_CASE("queries") {
  CHECK(DynCvdKernel(4).query().empty());
  DynCvdKernel shared(5);
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}) {
    shared.update(EdgeOp::insert(u, v));
  }
  CHECK(shared.query() == VertexSet{2});
}

TEST_CASE("tables, bounds and kernel soundness on random streams") {
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    dynfpt::testing::StreamGen gen(12, seed);
    DynCvdKernel st(12);
    st.set_checked(true);
    std::size_t previous_opt = 0;
    for (int step = 0; step < 40; ++step) {
      st.update(gen.next());
      const std::size_t opt = oracle::brute_cvd(st.graph());
      const VertexSet xs = st.solution();
      REQUIRE(is_cluster_deletion(st.graph(), xs));
      REQUIRE(xs.size() <= 3 * opt);
      // X grows from at most 3 opt(before) by the two endpoints and then by
      // at most 3 opt(after) while the new solution is swapped in.
      REQUIRE(st.peak_solution_size() <= 6 * std::max(opt, previous_opt) + 2);
      previous_opt = opt;
      REQUIRE(canonical(st) == canonical(DynCvdKernel::with_solution(st.graph(), xs)));

      const Kernel k = st.kernel();
      const std::size_t m = xs.size();
      REQUIRE(k.reduced.graph.vertex_count() <= m + 2 * m * (m + 1) * (m + 1));
      REQUIRE(k.forced.size() + oracle::brute_cvd(k.reduced.graph) == opt);
      REQUIRE(st.query().size() == opt);
    }
  }
}
