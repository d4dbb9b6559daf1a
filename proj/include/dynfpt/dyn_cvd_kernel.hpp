#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynfpt/graph.hpp"
#include "dynfpt/pset.hpp"

namespace dynfpt {

using ClusterLabel = std::uint64_t;

// Fully dynamic cluster vertex deletion around a 3-approximate solution X.
//
// For the cluster graph G[V \ X] the structure keeps
//   C_l          members of the cluster labelled l,
//   l_u          label of each free vertex u,
//   L_x          labels of the clusters adjacent to x in X,
//   P+(x, l)     C_l n N(x),
//   P-(x, l)     C_l \ N(x),
// with every vertex set held in a PSet so that a whole cluster can be copied
// in O(1). Moving one vertex in or out of X costs O(|X| log n), and each edge
// update rebuilds X from an O(|X|^3)-vertex kernel.
class DynCvdKernel {
 public:
  explicit DynCvdKernel(std::size_t n);

  // Builds all tables from scratch for a given cluster vertex deletion x.
  static DynCvdKernel with_solution(Graph g, const VertexSet& x);

  void update(const EdgeOp& op);

  // Minimum cluster vertex deletion, computed exactly on the kernel. Read-only.
  VertexSet query() const;

  // X0 = {x : |L_x| > |X| + 1} and G[V'] where V' holds X \ X0 plus up to
  // |X| + 1 of the smallest ids from every P+(x, l) and P-(x, l).
  Kernel kernel() const;

  // Low-level moves. add_to_x requires u outside X; remove_from_x requires
  // X \ {y} to remain a cluster vertex deletion.
  void add_to_x(Vertex u);
  void remove_from_x(Vertex y);

  // Replaces X by a fresh 3-approximation built on the kernel.
  void compress();

  const Graph& graph() const { return g_; }
  VertexSet solution() const { return {x_.begin(), x_.end()}; }
  bool in_solution(Vertex v) const { return in_x_.at(v); }

  std::vector<ClusterLabel> cluster_labels() const;
  std::optional<ClusterLabel> label_of(Vertex u) const;
  const PSet& cluster(ClusterLabel l) const;
  std::vector<ClusterLabel> incident_labels(Vertex x) const;
  const PSet& plus(Vertex x, ClusterLabel l) const;
  const PSet& minus(Vertex x, ClusterLabel l) const;

  // Largest |X| seen since the start of the last update().
  std::size_t peak_solution_size() const { return peak_; }

  // When set, every remove_from_x first verifies that X \ {y} is a cluster
  // vertex deletion of the whole graph (O(|E| * max degree)).
  void set_checked(bool on) { checked_ = on; }

 private:
  struct Incidence {
    PSet plus;
    PSet minus;
  };

  DynCvdKernel(Graph g, bool);

  const Incidence& incidence(Vertex x, ClusterLabel l) const;
  void replace_solution(const VertexSet& target);

  Graph g_;
  std::set<Vertex> x_;
  std::vector<bool> in_x_;
  std::vector<ClusterLabel> label_;  // 0 for vertices in X
  std::unordered_map<ClusterLabel, PSet> clusters_;
  std::vector<std::map<ClusterLabel, Incidence>> incidences_;
  ClusterLabel next_label_ = 1;
  std::size_t peak_ = 0;
#ifdef NDEBUG
  bool checked_ = false;
#else
  bool checked_ = true;
#endif
};

}  // namespace dynfpt
