#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynfpt/graph.hpp"
#include "dynfpt/multigraph.hpp"

namespace dynfpt {

using Weight = std::int64_t;

struct WeightedGraph {
  Graph graph;
  std::vector<Weight> weight;  // one per vertex, each >= 1
};

struct FlowNet {
  struct Arc {
    int from;
    int to;
    std::int64_t capacity;
  };

  int node_count = 0;
  int source = 0;
  int sink = 1;
  std::vector<Arc> arcs;

  int add_node() { return node_count++; }
  void add_arc(int from, int to, std::int64_t capacity) { arcs.push_back({from, to, capacity}); }
};

// Greedy maximal matching in edge order; both endpoints of every matched edge.
VertexSet vc_2approx(const Graph& g);

// Minimum vertex cover, or nothing if it is larger than budget.
std::optional<VertexSet> vc_exact(const Graph& g, std::optional<std::size_t> budget = std::nullopt);

// Repeatedly deletes all three vertices of the first induced P3.
VertexSet cvd_3approx(const Graph& g);

// Minimum-weight cluster vertex deletion, or nothing if its weight exceeds
// budget. Ties resolve to the first optimum in branch order.
std::optional<VertexSet> cvd_exact_weighted(const WeightedGraph& g,
                                            std::optional<Weight> budget = std::nullopt);

std::optional<VertexSet> cvd_exact(const Graph& g, std::optional<std::size_t> budget = std::nullopt);

// Minimum feedback vertex set of g that avoids `forbidden`, if one of size at
// most budget exists. Parallel edges and self-loops count as cycles.
std::optional<VertexSet> disjoint_fvs(const Multigraph& g, std::span<const Vertex> forbidden,
                                      std::size_t budget);

std::optional<VertexSet> fvs_exact(const Graph& g, std::optional<std::size_t> budget = std::nullopt);

// Edmonds-Karp (Ford-Fulkerson with BFS augmenting paths).
std::int64_t max_flow(const FlowNet& net);

// Exact chromatic number by backtracking over color assignments.
int chromatic_exact(const Graph& g);

}  // namespace dynfpt
