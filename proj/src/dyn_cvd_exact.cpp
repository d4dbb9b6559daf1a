#include "dynfpt/dyn_cvd_exact.hpp"

#include <algorithm>
#include <string>

namespace dynfpt {

DynCvdExact::DynCvdExact(std::size_t n) : g_(n), in_x_(n, false), label_(n, 0), touch_(n) {
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    label_[v] = next_label_++;
    Cluster c;
    c.members.insert(v);
    c.classes[{}].insert(v);
    clusters_.emplace(label_[v], std::move(c));
  }
}

DynCvdExact DynCvdExact::with_solution(const Graph& g, const VertexSet& x) {
  if (!is_cluster_deletion(g, x)) throw Error(Errc::AssumptionViolated, "initial set is not a cluster vertex deletion");
  const VertexSet keep = sorted_unique(x);
  DynCvdExact st(g.vertex_count());
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) st.move_to_x(v);
  st.g_ = g;
  // Every superset of x is a solution, so vertices can leave one at a time.
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!std::binary_search(keep.begin(), keep.end(), v)) st.remove_from_x(v);
  }
  return st;
}

const DynCvdExact::Cluster& DynCvdExact::cluster_at(ClusterLabel l) const {
  auto it = clusters_.find(l);
  if (it == clusters_.end()) throw Error(Errc::StaleLabel, "cluster label " + std::to_string(l));
  return it->second;
}

std::vector<ClusterLabel> DynCvdExact::cluster_labels() const {
  std::vector<ClusterLabel> out;
  for (const auto& [l, c] : clusters_) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClusterLabel> DynCvdExact::label_of(Vertex v) const {
  if (in_x_.at(v)) return std::nullopt;
  return label_[v];
}

const std::set<Vertex>& DynCvdExact::cluster(ClusterLabel l) const { return cluster_at(l).members; }

const std::map<ClassKey, std::set<Vertex>>& DynCvdExact::classes(ClusterLabel l) const {
  return cluster_at(l).classes;
}

VertexSet DynCvdExact::attached(ClusterLabel l) const {
  VertexSet out;
  for (const auto& [key, members] : cluster_at(l).classes) out.insert(out.end(), key.begin(), key.end());
  return sorted_unique(std::move(out));
}

std::vector<ClusterLabel> DynCvdExact::adjacent_clusters(Vertex x) const {
  if (!in_x_.at(x)) throw Error(Errc::NotInX, "vertex " + std::to_string(x));
  std::vector<ClusterLabel> out;
  for (const auto& [l, count] : touch_[x]) out.push_back(l);
  return out;
}

ClassKey DynCvdExact::solution_neighbors(Vertex v) const {
  ClassKey key;
  for (Vertex x : x_) {
    if (x != v && g_.has_edge(x, v)) key.push_back(x);
  }
  return key;
}

// Renames every class p_{l,S} of c to p_{l,S+v} (add) or p_{l,S-v} (remove).
void DynCvdExact::rekey(Cluster& c, Vertex v, bool add) {
  std::map<ClassKey, std::set<Vertex>> renamed;
  for (auto& [key, members] : c.classes) {
    ClassKey k = key;
    auto pos = std::lower_bound(k.begin(), k.end(), v);
    if (add) {
      k.insert(pos, v);
    } else {
      if (pos == k.end() || *pos != v) throw InvariantError("class key misses the departing vertex");
      k.erase(pos);
    }
    renamed.emplace(std::move(k), std::move(members));
  }
  c.classes = std::move(renamed);
}

void DynCvdExact::move_to_x(Vertex v) {
  if (in_x_.at(v)) throw Error(Errc::NotFree, "vertex " + std::to_string(v) + " already in X");
  const ClusterLabel l = label_[v];
  if (listener_) listener_->cluster_detaching(l);

  Cluster& c = clusters_.at(l);
  const ClassKey key = solution_neighbors(v);
  auto cls = c.classes.find(key);
  if (cls == c.classes.end() || !cls->second.erase(v)) throw InvariantError("vertex missing from its class");
  if (cls->second.empty()) c.classes.erase(cls);
  c.members.erase(v);
  for (Vertex x : key) {
    if (--touch_[x].at(l) == 0) touch_[x].erase(l);
  }

  x_.insert(v);
  in_x_[v] = true;
  label_[v] = 0;
  touch_[v].clear();
  if (c.members.empty()) {
    clusters_.erase(l);
    return;
  }
  touch_[v][l] = c.members.size();
  rekey(c, v, true);
  if (listener_) listener_->cluster_attached(l);
}

void DynCvdExact::remove_from_x(Vertex v) {
  if (!in_x_.at(v)) throw Error(Errc::NotInX, "vertex " + std::to_string(v));
  const auto& adjacent = touch_[v];
  if (adjacent.size() > 1) {
    throw Error(Errc::AssumptionViolated, "vertex " + std::to_string(v) + " touches " +
                                              std::to_string(adjacent.size()) + " clusters");
  }
  if (adjacent.size() == 1 && adjacent.begin()->second != clusters_.at(adjacent.begin()->first).members.size()) {
    throw Error(Errc::AssumptionViolated, "vertex " + std::to_string(v) + " misses part of its cluster");
  }
  if (checked_) {
    std::vector<bool> alive(g_.vertex_count(), true);
    for (Vertex x : x_) alive[x] = x == v;
    if (find_induced_p3(g_, alive)) {
      throw InvariantError("X \\ {" + std::to_string(v) + "} is not a cluster vertex deletion");
    }
  }

  ClusterLabel l;
  if (adjacent.empty()) {
    l = next_label_++;
    clusters_.emplace(l, Cluster{});
  } else {
    l = adjacent.begin()->first;
    if (listener_) listener_->cluster_detaching(l);
  }
  touch_[v].clear();
  x_.erase(v);
  in_x_[v] = false;
  label_[v] = l;

  Cluster& c = clusters_.at(l);
  rekey(c, v, false);
  const ClassKey key = solution_neighbors(v);
  c.classes[key].insert(v);
  c.members.insert(v);
  for (Vertex x : key) ++touch_[x][l];
  if (listener_) listener_->cluster_attached(l);
}

CompressionInstance DynCvdExact::build_compression_instance() const {
  CompressionInstance inst;
  VertexSet x0;
  std::set<ClusterLabel> labels;
  for (Vertex x : x_) {
    if (touch_[x].size() <= x_.size()) {
      x0.push_back(x);
      for (const auto& [l, count] : touch_[x]) labels.insert(l);
    } else {
      inst.kept.push_back(x);
    }
  }
  for (Vertex x : x0) inst.nodes.push_back({CompressionInstance::Node::Kind::SolutionVertex, x, 0, {}});
  std::vector<std::pair<std::size_t, std::size_t>> cluster_ranges;
  for (ClusterLabel l : labels) {
    const std::size_t begin = inst.nodes.size();
    for (const auto& [key, members] : clusters_.at(l).classes) {
      inst.nodes.push_back({CompressionInstance::Node::Kind::Class, -1, l, key});
    }
    cluster_ranges.emplace_back(begin, inst.nodes.size());
  }

  inst.graph.graph = Graph(inst.nodes.size());
  inst.graph.weight.assign(inst.nodes.size(), 1);
  for (std::size_t i = 0; i < x0.size(); ++i) {
    for (std::size_t j = i + 1; j < x0.size(); ++j) {
      if (g_.has_edge(x0[i], x0[j])) inst.graph.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (auto [begin, end] : cluster_ranges) {
    for (std::size_t a = begin; a < end; ++a) {
      const auto& node = inst.nodes[a];
      inst.graph.weight[a] = static_cast<Weight>(clusters_.at(node.label).classes.at(node.key).size());
      for (std::size_t b = a + 1; b < end; ++b) inst.graph.graph.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      for (std::size_t i = 0; i < x0.size(); ++i) {
        if (std::binary_search(node.key.begin(), node.key.end(), x0[i])) {
          inst.graph.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(a));
        }
      }
    }
  }
  return inst;
}

void DynCvdExact::update(const EdgeOp& op) {
  g_.validate(op);
  for (Vertex v : {std::min(op.u, op.v), std::max(op.u, op.v)}) {
    if (!in_x_[v]) move_to_x(v);
  }
  g_.apply(op);

  const CompressionInstance inst = build_compression_instance();
  Weight x0_weight = 0;
  for (const auto& node : inst.nodes) x0_weight += node.kind == CompressionInstance::Node::Kind::SolutionVertex;
  const auto chosen = cvd_exact_weighted(inst.graph, x0_weight);
  if (!chosen) throw InvariantError("compression instance has no solution within |X0|");

  VertexSet target = inst.kept;
  for (Vertex i : *chosen) {
    const auto& node = inst.nodes[i];
    if (node.kind == CompressionInstance::Node::Kind::SolutionVertex) {
      target.push_back(node.vertex);
    } else {
      const auto& members = clusters_.at(node.label).classes.at(node.key);
      target.insert(target.end(), members.begin(), members.end());
    }
  }
  target = sorted_unique(std::move(target));

  std::vector<Vertex> removals;
  for (Vertex x : x_) {
    if (!std::binary_search(target.begin(), target.end(), x)) removals.push_back(x);
  }
  for (Vertex v : target) {
    if (!in_x_[v]) move_to_x(v);
  }
  for (Vertex v : removals) remove_from_x(v);
}

}  // namespace dynfpt
