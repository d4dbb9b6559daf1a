#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dynfpt/graph.hpp"

namespace dynfpt {

// Undirected multigraph over an explicit vertex list, keyed by original ids.
// Parallel edges are stored as multiplicities; a self-loop is the pair (v, v)
// and contributes 2 to the degree of v.
struct Multigraph {
  VertexSet vertices;
  std::map<std::pair<Vertex, Vertex>, int> edges;

  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v, int count = 1);
  int multiplicity(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::size_t edge_count() const;

  bool operator==(const Multigraph&) const = default;
};

}  // namespace dynfpt
