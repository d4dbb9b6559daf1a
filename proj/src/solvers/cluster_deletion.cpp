#include <algorithm>
#include <limits>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

VertexSet cvd_3approx(const Graph& g) {
  std::vector<bool> alive(g.vertex_count(), true);
  VertexSet removed;
  while (auto p = find_induced_p3(g, alive)) {
    for (Vertex v : {p->a, p->b, p->c}) {
      alive[v] = false;
      removed.push_back(v);
    }
  }
  return sorted_unique(std::move(removed));
}

namespace {

class CvdSearch {
 public:
  CvdSearch(const Graph& g, const std::vector<Weight>& weight, Weight limit)
      : g_(g), weight_(weight), alive_(g.vertex_count(), true), best_weight_(limit) {}

  std::optional<VertexSet> run() {
    search(0);
    if (!found_) return std::nullopt;
    return sorted_unique(best_);
  }

 private:
  // Vertex-disjoint induced P3s each force their cheapest vertex.
  Weight packing_bound() const {
    std::vector<bool> free = alive_;
    Weight lb = 0;
    while (auto p = find_induced_p3(g_, free)) {
      lb += std::min({weight_[p->a], weight_[p->b], weight_[p->c]});
      free[p->a] = free[p->b] = free[p->c] = false;
    }
    return lb;
  }

  void search(Weight spent) {
    auto p3 = find_induced_p3(g_, alive_);
    if (!p3) {
      if (spent <= best_weight_ && (!found_ || spent < best_weight_)) {
        best_ = chosen_;
        best_weight_ = spent;
        found_ = true;
      }
      return;
    }
    const Weight bound = spent + packing_bound();
    if (bound > best_weight_ || (found_ && bound >= best_weight_)) return;
    for (Vertex v : {p3->a, p3->b, p3->c}) {
      alive_[v] = false;
      chosen_.push_back(v);
      search(spent + weight_[v]);
      chosen_.pop_back();
      alive_[v] = true;
    }
  }

  const Graph& g_;
  const std::vector<Weight>& weight_;
  std::vector<bool> alive_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  Weight best_weight_;
  bool found_ = false;
};

}  // namespace

std::optional<VertexSet> cvd_exact_weighted(const WeightedGraph& g, std::optional<Weight> budget) {
  if (g.weight.size() != g.graph.vertex_count()) {
    throw Error(Errc::InvalidOp, "weight vector does not match vertex count");
  }
  Weight total = 0;
  for (Weight w : g.weight) {
    if (w < 1) throw Error(Errc::InvalidOp, "vertex weights must be >= 1");
    total += w;
  }
  return CvdSearch(g.graph, g.weight, budget.value_or(total)).run();
}

std::optional<VertexSet> cvd_exact(const Graph& g, std::optional<std::size_t> budget) {
  const std::vector<Weight> unit(g.vertex_count(), 1);
  const Weight total = static_cast<Weight>(g.vertex_count());
  return CvdSearch(g, unit, budget ? static_cast<Weight>(*budget) : total).run();
}

}  // namespace dynfpt
