#include "dynfpt/multigraph.hpp"

#include <algorithm>

namespace dynfpt {

void Multigraph::add_vertex(Vertex v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) vertices.insert(it, v);
}

void Multigraph::add_edge(Vertex u, Vertex v, int count) {
  if (count <= 0) return;
  add_vertex(u);
  add_vertex(v);
  edges[{std::min(u, v), std::max(u, v)}] += count;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  auto it = edges.find({std::min(u, v), std::max(u, v)});
  return it == edges.end() ? 0 : it->second;
}

int Multigraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& [e, m] : edges) {
    if (e.first == v) d += m;
    if (e.second == v) d += m;
  }
  return d;
}

std::size_t Multigraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& [e, m] : edges) total += static_cast<std::size_t>(m);
  return total;
}

}  // namespace dynfpt
