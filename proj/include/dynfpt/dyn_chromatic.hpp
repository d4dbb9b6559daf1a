#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynfpt/dyn_cvd_exact.hpp"
#include "dynfpt/partition.hpp"

namespace dynfpt {

// Fewest colors for a clique whose members are grouped by their neighbourhood
// in a colored set, given the coloring p of that set. class_sizes maps each
// neighbourhood (a subset of p's domain) to the number of members sharing it.
// Solved as a max flow that reuses as many colors of p as possible.
int extension_colors(const Partition& p, const std::map<ClassKey, std::size_t>& class_sizes);

// Fully dynamic chromatic number parameterized by cluster vertex deletion.
// For every cluster l and every partition p of its attached solution vertices
// X_l it keeps chi(l, p), the fewest colors for X_l + C_l extending p. Values
// are pooled per (X_l, p) in multisets so the answer is a min over proper
// colorings of G[X] of the largest pooled value they restrict to.
class DynChromatic : private DynCvdExact::Listener {
 public:
  using ChiTable = std::map<std::pair<ClusterLabel, Partition>, int>;
  using PoolTable = std::map<VertexSet, std::map<Partition, std::multiset<int>>>;

  explicit DynChromatic(std::size_t n);
  DynChromatic(const DynChromatic&) = delete;
  DynChromatic& operator=(const DynChromatic&) = delete;

  void update(const EdgeOp& op);
  int chromatic_number() const { return answer_; }

  // Fewest colors for cluster l given the coloring p of X_l, by max flow.
  int compute_chi(ClusterLabel l, const Partition& p) const;

  const DynCvdExact& base() const { return base_; }
  ChiTable chi_table() const;
  const PoolTable& pools() const { return pools_; }
  // Answer evaluated from the maintained pools.
  int evaluate_answer() const;

 private:
  struct ClusterEntry {
    VertexSet key;
    std::vector<std::pair<Partition, int>> chi;
  };

  void cluster_detaching(ClusterLabel l) override;
  void cluster_attached(ClusterLabel l) override;

  DynCvdExact base_;
  std::unordered_map<ClusterLabel, ClusterEntry> entries_;
  PoolTable pools_;
  int answer_ = 0;
};

}  // namespace dynfpt
