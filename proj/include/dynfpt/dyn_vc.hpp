#pragma once

#include <set>

#include "dynfpt/graph.hpp"

namespace dynfpt {

// Fully dynamic vertex cover. Keeps a 2-approximate cover X that is
// recomputed from an O(|X|^2) kernel after every edge update; exact answers
// come from the same kernel with an exact solver.
class DynVc {
 public:
  explicit DynVc(std::size_t n);

  void update(const EdgeOp& op);

  // Minimum vertex cover of the current graph. Does not touch X.
  VertexSet query() const;

  // Forced vertices X0 (degree > |X|) and G[V'] for V' = N[X \ X0] \ X0.
  Kernel kernel() const;

  const Graph& graph() const { return g_; }
  VertexSet approximate() const { return {x_.begin(), x_.end()}; }

 private:
  void recompute();

  Graph g_;
  std::set<Vertex> x_;
};

}  // namespace dynfpt
