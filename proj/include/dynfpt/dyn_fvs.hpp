#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dynfpt/graph.hpp"
#include "dynfpt/link_cut.hpp"
#include "dynfpt/multigraph.hpp"

namespace dynfpt {

// Graph obtained from G[V \ R] by deleting free vertices of degree at most 1
// and bypassing free vertices of degree 2 until neither applies. The protected
// set S = X \ R is never touched.
struct ReducedGraph {
  enum class Source { SolutionEdge, SolutionPath, CoreCore, SolutionCore };
  struct Provenance {
    Vertex u;
    Vertex v;
    Source source;
  };

  Multigraph graph;
  VertexSet protected_set;
  VertexSet core;
  std::vector<Provenance> provenance;
};

// Fully dynamic minimum feedback vertex set for graphs of maximum degree d.
// The forest G[V \ X] is mirrored in a link-cut forest so that the reduced
// graph for every candidate overlap R can be built from meet and
// connectivity queries instead of a scan of the whole graph.
class DynFvs {
 public:
  DynFvs(std::size_t n, std::size_t max_degree);
  // Starts from g with feedback vertex set x, which need not be minimum.
  static DynFvs with_solution(const Graph& g, std::span<const Vertex> x, std::size_t max_degree);

  void update(const EdgeOp& op);
  VertexSet solution() const { return {x_.begin(), x_.end()}; }

  // Reduced graph for R = r, without the size cutoff.
  ReducedGraph build_reduced(std::span<const Vertex> r);
  // As build_reduced, but nothing when the reduced graph has at least 14|S|
  // vertices. An empty S yields an empty graph.
  std::optional<ReducedGraph> reduce(std::span<const Vertex> r);
  // Smallest S' outside X with |S'| <= budget such that r + S' is a feedback
  // vertex set, when the reduced graph exposes one.
  std::optional<VertexSet> solve_disjoint(std::span<const Vertex> r, std::size_t budget);

  const Graph& graph() const { return g_; }
  std::size_t max_degree() const { return d_; }
  std::vector<std::pair<Vertex, Vertex>> forest_edges() { return forest_.edges(); }

  void set_checked(bool on) { checked_ = on; }

 private:
  void check_subset(std::span<const Vertex> r) const;
  void move_to_x(Vertex v);
  void remove_from_x(Vertex v);
  void compress();

  Graph g_;
  std::size_t d_;
  std::set<Vertex> x_;
  std::vector<bool> in_x_;
  LinkCutForest forest_;
#ifdef NDEBUG
  bool checked_ = false;
#else
  bool checked_ = true;
#endif
};

}  // namespace dynfpt
