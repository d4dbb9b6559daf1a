#include "dynfpt/partition.hpp"

#include <algorithm>
#include <string>

namespace dynfpt {

Partition::Partition(VertexSet domain, std::vector<int> rgs) : domain_(std::move(domain)), rgs_(std::move(rgs)) {
  if (domain_.size() != rgs_.size()) throw Error(Errc::InvalidOp, "partition string length mismatch");
  if (!std::is_sorted(domain_.begin(), domain_.end()) ||
      std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end()) {
    throw Error(Errc::InvalidOp, "partition domain must be sorted and distinct");
  }
  for (int b : rgs_) {
    if (b < 0 || b > blocks_) throw Error(Errc::InvalidOp, "partition string is not restricted-growth");
    if (b == blocks_) ++blocks_;
  }
}

int Partition::block_of(Vertex v) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v) throw Error(Errc::MissingElement, "vertex " + std::to_string(v));
  return rgs_[it - domain_.begin()];
}

std::vector<VertexSet> Partition::blocks() const {
  std::vector<VertexSet> out(blocks_);
  for (std::size_t i = 0; i < domain_.size(); ++i) out[rgs_[i]].push_back(domain_[i]);
  return out;
}

Partition Partition::restrict_to(std::span<const Vertex> sub) const {
  std::vector<int> rename(blocks_, -1);
  std::vector<int> rgs;
  rgs.reserve(sub.size());
  int next = 0;
  for (Vertex v : sub) {
    int& r = rename[block_of(v)];
    if (r < 0) r = next++;
    rgs.push_back(r);
  }
  return Partition(VertexSet(sub.begin(), sub.end()), std::move(rgs));
}

bool Partition::is_proper(const Graph& g) const {
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = i + 1; j < domain_.size(); ++j) {
      if (rgs_[i] == rgs_[j] && g.has_edge(domain_[i], domain_[j])) return false;
    }
  }
  return true;
}

void for_each_partition(std::span<const Vertex> s, const std::function<void(const Partition&)>& visit,
                        std::size_t cap) {
  if (s.size() > cap) {
    throw Error(Errc::CapExceeded, "cannot enumerate partitions of " + std::to_string(s.size()) +
                                       " elements (cap " + std::to_string(cap) + ")");
  }
  const VertexSet domain(s.begin(), s.end());
  const std::size_t n = domain.size();
  std::vector<int> rgs(n, 0);
  // limit[i] = max(rgs[0..i-1]) + 1, the largest value rgs[i] may take.
  std::vector<int> limit(n + 1, 0);
  auto emit = [&] { visit(Partition(domain, rgs)); };
  if (n == 0) {
    emit();
    return;
  }
  for (std::size_t i = 1; i <= n; ++i) limit[i] = 1;
  while (true) {
    emit();
    std::size_t i = n;
    while (i > 1 && rgs[i - 1] == limit[i - 1]) --i;
    if (i <= 1) return;
    ++rgs[i - 1];
    for (std::size_t j = i; j < n; ++j) {
      limit[j] = std::max(limit[j - 1], rgs[j - 1] + 1);
      rgs[j] = 0;
    }
  }
}

std::vector<Partition> enumerate_partitions(std::span<const Vertex> s, std::size_t cap) {
  std::vector<Partition> out;
  for_each_partition(s, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace dynfpt
