#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynfpt/dyn_cvd_kernel.hpp"
#include "dynfpt/graph.hpp"
#include "dynfpt/solvers.hpp"

namespace dynfpt {

// Key of an equivalence class inside a cluster: the sorted set S = N(v) n X
// shared by all its members.
using ClassKey = VertexSet;

// Weighted graph G' solved during compression, with the origin of each node.
struct CompressionInstance {
  struct Node {
    enum class Kind { SolutionVertex, Class };
    Kind kind;
    Vertex vertex = -1;       // SolutionVertex
    ClusterLabel label = 0;   // Class
    ClassKey key;             // Class
  };

  WeightedGraph graph;
  std::vector<Node> nodes;
  VertexSet kept;  // X1: solution vertices touching more than |X| clusters
};

// Fully dynamic exact cluster vertex deletion. Keeps a minimum solution X and,
// per cluster of G[V \ X], the partition of its members into classes of equal
// X-neighbourhood. Each update grows X by the edge endpoints, solves a
// weighted instance whose size depends only on |X|, and exchanges X for the
// new optimum one vertex at a time.
class DynCvdExact {
 public:
  // Receives a call before a cluster's classes change and another once they
  // have settled. The label passed to cluster_attached may be freshly created.
  class Listener {
   public:
    virtual ~Listener() = default;
    virtual void cluster_detaching(ClusterLabel l) = 0;
    virtual void cluster_attached(ClusterLabel l) = 0;
  };

  explicit DynCvdExact(std::size_t n);
  // Starts from g with cluster vertex deletion x, which need not be minimum.
  static DynCvdExact with_solution(const Graph& g, const VertexSet& x);

  void update(const EdgeOp& op);
  VertexSet solution() const { return {x_.begin(), x_.end()}; }

  void move_to_x(Vertex v);
  void remove_from_x(Vertex v);
  CompressionInstance build_compression_instance() const;

  const Graph& graph() const { return g_; }
  bool in_solution(Vertex v) const { return in_x_.at(v); }

  std::vector<ClusterLabel> cluster_labels() const;
  std::optional<ClusterLabel> label_of(Vertex v) const;
  const std::set<Vertex>& cluster(ClusterLabel l) const;
  const std::map<ClassKey, std::set<Vertex>>& classes(ClusterLabel l) const;
  // X_l: solution vertices adjacent to cluster l.
  VertexSet attached(ClusterLabel l) const;
  // Labels of the clusters adjacent to x in X.
  std::vector<ClusterLabel> adjacent_clusters(Vertex x) const;

  void set_listener(Listener* listener) { listener_ = listener; }
  void set_checked(bool on) { checked_ = on; }

 private:
  struct Cluster {
    std::set<Vertex> members;
    std::map<ClassKey, std::set<Vertex>> classes;
  };

  const Cluster& cluster_at(ClusterLabel l) const;
  ClassKey solution_neighbors(Vertex v) const;
  void rekey(Cluster& c, Vertex v, bool add);

  Graph g_;
  std::set<Vertex> x_;
  std::vector<bool> in_x_;
  std::vector<ClusterLabel> label_;
  std::unordered_map<ClusterLabel, Cluster> clusters_;
  // touch_[x][l] = |N(x) n C_l| for x in X; an entry exists iff it is positive.
  std::vector<std::map<ClusterLabel, std::size_t>> touch_;
  ClusterLabel next_label_ = 1;
  Listener* listener_ = nullptr;
#ifdef NDEBUG
  bool checked_ = false;
#else
  bool checked_ = true;
#endif
};

}  // namespace dynfpt
