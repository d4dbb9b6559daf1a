#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dynfpt/graph.hpp"

namespace dynfpt {

// Set partition of a sorted vertex subset, stored as a restricted-growth
// string: rgs[i] is the block of domain[i], and block indices first appear in
// increasing order.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidOp unless rgs is canonical and matches the domain size.
  Partition(VertexSet domain, std::vector<int> rgs);

  const VertexSet& domain() const { return domain_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int block_count() const { return blocks_; }
  // Block index of v; throws MissingElement if v is outside the domain.
  int block_of(Vertex v) const;
  std::vector<VertexSet> blocks() const;
  // Induced partition on sub, renumbered canonically. sub must be sorted and
  // contained in the domain.
  Partition restrict_to(std::span<const Vertex> sub) const;
  // No block contains both endpoints of an edge of g.
  bool is_proper(const Graph& g) const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  VertexSet domain_;
  std::vector<int> rgs_;
  int blocks_ = 0;
};

inline constexpr std::size_t kPartitionCap = 12;

// Calls visit for every partition of s in lexicographic order of the
// restricted-growth string. Throws CapExceeded if |s| > cap.
void for_each_partition(std::span<const Vertex> s, const std::function<void(const Partition&)>& visit,
                        std::size_t cap = kPartitionCap);
std::vector<Partition> enumerate_partitions(std::span<const Vertex> s, std::size_t cap = kPartitionCap);

}  // namespace dynfpt
