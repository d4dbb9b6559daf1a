#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "dynfpt/error.hpp"

namespace dynfpt {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct EdgeOp {
  enum class Kind { Insert, Delete };

  Kind kind;
  Vertex u;
  Vertex v;

  static EdgeOp insert(Vertex u, Vertex v) { return {Kind::Insert, u, v}; }
  static EdgeOp erase(Vertex u, Vertex v) { return {Kind::Delete, u, v}; }

  bool is_insert() const { return kind == Kind::Insert; }
};

struct InducedSubgraph;

// Simple undirected graph over the fixed vertex universe 0..n-1. Only edges
// change after construction.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  const std::set<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void apply(const EdgeOp& op);

  // Throws exactly what apply(op) would throw, without modifying the graph.
  void validate(const EdgeOp& op) const;

  // All edges as (min, max) pairs in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  InducedSubgraph induced(std::span<const Vertex> s) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::set<Vertex>> adj_;
  std::size_t m_ = 0;
};

// G[S] with local ids 0..|S|-1; original[i] is the id in the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;

  VertexSet to_original(std::span<const Vertex> local) const;
};

// Output of a kernelization: vertices every small solution must contain, plus
// the reduced instance whose optimum accounts for the rest.
struct Kernel {
  VertexSet forced;
  InducedSubgraph reduced;
};

struct P3 {
  Vertex a;
  Vertex b;
  Vertex c;

  bool operator==(const P3&) const = default;
};

// First induced path a-b-c in id order of (b, a, c), or nothing when g is a
// cluster graph.
std::optional<P3> find_induced_p3(const Graph& g);

// Same search restricted to vertices with alive[v] set.
std::optional<P3> find_induced_p3(const Graph& g, const std::vector<bool>& alive);

bool is_cluster_graph(const Graph& g);

// True when every edge has an endpoint in cover.
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);
bool is_cluster_deletion(const Graph& g, std::span<const Vertex> removed);
bool is_feedback_vertex_set(const Graph& g, std::span<const Vertex> removed);

VertexSet sorted_unique(std::vector<Vertex> v);

}  // namespace dynfpt
