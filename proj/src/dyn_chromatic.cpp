#include "dynfpt/dyn_chromatic.hpp"

#include <algorithm>
#include <string>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

DynChromatic::DynChromatic(std::size_t n) : base_(n) {
  base_.set_listener(this);
  for (ClusterLabel l : base_.cluster_labels()) cluster_attached(l);
  answer_ = evaluate_answer();
}

void DynChromatic::update(const EdgeOp& op) {
  base_.update(op);
  answer_ = evaluate_answer();
}

int extension_colors(const Partition& p, const std::map<ClassKey, std::size_t>& class_sizes) {
  FlowNet net;
  net.source = net.add_node();
  net.sink = net.add_node();
  std::vector<int> color(p.block_count());
  for (int& c : color) {
    c = net.add_node();
    net.add_arc(net.source, c, 1);
  }
  std::int64_t members = 0;
  for (const auto& [key, size] : class_sizes) {
    if (size == 0) continue;
    const int y = net.add_node();
    net.add_arc(y, net.sink, static_cast<std::int64_t>(size));
    members += static_cast<std::int64_t>(size);
    std::vector<bool> used(color.size(), false);
    for (Vertex x : key) used[p.block_of(x)] = true;
    for (std::size_t i = 0; i < color.size(); ++i) {
      if (!used[i]) net.add_arc(color[i], y, 1);
    }
  }
  return static_cast<int>(p.block_count() + members - max_flow(net));
}

int DynChromatic::compute_chi(ClusterLabel l, const Partition& p) const {
  std::map<ClassKey, std::size_t> sizes;
  for (const auto& [key, cls] : base_.classes(l)) sizes.emplace(key, cls.size());
  if (p.domain() != base_.attached(l)) throw Error(Errc::InvalidOp, "partition is not over the attached set");
  return extension_colors(p, sizes);
}

void DynChromatic::cluster_detaching(ClusterLabel l) {
  auto it = entries_.find(l);
  if (it == entries_.end()) throw InvariantError("no entry for cluster " + std::to_string(l));
  auto pool = pools_.find(it->second.key);
  for (const auto& [p, chi] : it->second.chi) {
    auto& values = pool->second.at(p);
    values.erase(values.find(chi));
    if (values.empty()) pool->second.erase(p);
  }
  if (pool->second.empty()) pools_.erase(pool);
  entries_.erase(it);
}

void DynChromatic::cluster_attached(ClusterLabel l) {
  ClusterEntry entry;
  entry.key = base_.attached(l);
  auto& pool = pools_[entry.key];
  for_each_partition(entry.key, [&](const Partition& p) {
    const int chi = compute_chi(l, p);
    entry.chi.emplace_back(p, chi);
    pool[p].insert(chi);
  });
  entries_[l] = std::move(entry);
}

DynChromatic::ChiTable DynChromatic::chi_table() const {
  ChiTable out;
  for (const auto& [l, entry] : entries_) {
    for (const auto& [p, chi] : entry.chi) out.emplace(std::make_pair(l, p), chi);
  }
  return out;
}

int DynChromatic::evaluate_answer() const {
  if (base_.graph().vertex_count() == 0) return 0;
  const VertexSet x = base_.solution();
  int best = -1;
  for_each_partition(x, [&](const Partition& p) {
    if (!p.is_proper(base_.graph())) return;
    int value = p.block_count();
    for (const auto& [key, by_partition] : pools_) {
      const auto& values = by_partition.at(p.restrict_to(key));
      value = std::max(value, *values.rbegin());
    }
    if (best < 0 || value < best) best = value;
  });
  return best;
}

}  // namespace dynfpt
