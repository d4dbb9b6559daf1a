#include "dynfpt/dyn_cvd_kernel.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

DynCvdKernel::DynCvdKernel(Graph g, bool)
    : g_(std::move(g)),
      in_x_(g_.vertex_count(), false),
      label_(g_.vertex_count(), 0),
      incidences_(g_.vertex_count()) {}

DynCvdKernel::DynCvdKernel(std::size_t n) : DynCvdKernel(Graph(n), true) {
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    label_[v] = next_label_++;
    clusters_.emplace(label_[v], PSet{}.insert(v));
  }
}

DynCvdKernel DynCvdKernel::with_solution(Graph g, const VertexSet& x) {
  DynCvdKernel st(std::move(g), true);
  const Graph& graph = st.g_;
  for (Vertex v : x) {
    st.in_x_.at(v) = true;
    st.x_.insert(v);
  }
  for (Vertex s = 0; s < static_cast<Vertex>(graph.vertex_count()); ++s) {
    if (st.in_x_[s] || st.label_[s] != 0) continue;
    const ClusterLabel l = st.next_label_++;
    PSet members;
    std::vector<Vertex> component;
    std::deque<Vertex> queue{s};
    st.label_[s] = l;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      component.push_back(u);
      members = members.insert(u);
      for (Vertex w : graph.neighbors(u)) {
        if (!st.in_x_[w] && st.label_[w] == 0) {
          st.label_[w] = l;
          queue.push_back(w);
        }
      }
    }
    for (Vertex u : component) {
      std::size_t free_degree = 0;
      for (Vertex w : graph.neighbors(u)) free_degree += st.in_x_[w] ? 0 : 1;
      if (free_degree + 1 != component.size()) {
        throw Error(Errc::AssumptionViolated, "given set is not a cluster vertex deletion");
      }
    }
    st.clusters_.emplace(l, members);
  }
  for (Vertex xv : st.x_) {
    std::map<ClusterLabel, PSet> plus;
    for (Vertex w : graph.neighbors(xv)) {
      if (!st.in_x_[w]) plus[st.label_[w]] = plus[st.label_[w]].insert(w);
    }
    for (auto& [l, p] : plus) {
      PSet minus;
      st.clusters_.at(l).for_each([&](Vertex w) {
        if (!p.contains(w)) minus = minus.insert(w);
      });
      st.incidences_[xv].emplace(l, Incidence{p, minus});
    }
  }
  st.peak_ = st.x_.size();
  return st;
}

std::vector<ClusterLabel> DynCvdKernel::cluster_labels() const {
  std::vector<ClusterLabel> out;
  out.reserve(clusters_.size());
  for (const auto& [l, c] : clusters_) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClusterLabel> DynCvdKernel::label_of(Vertex u) const {
  if (in_x_.at(u)) return std::nullopt;
  return label_[u];
}

const PSet& DynCvdKernel::cluster(ClusterLabel l) const {
  auto it = clusters_.find(l);
  if (it == clusters_.end()) throw Error(Errc::StaleLabel, "cluster label " + std::to_string(l));
  return it->second;
}

std::vector<ClusterLabel> DynCvdKernel::incident_labels(Vertex x) const {
  if (!in_x_.at(x)) throw Error(Errc::NotInX, "vertex " + std::to_string(x));
  std::vector<ClusterLabel> out;
  for (const auto& [l, inc] : incidences_[x]) out.push_back(l);
  return out;
}

const DynCvdKernel::Incidence& DynCvdKernel::incidence(Vertex x, ClusterLabel l) const {
  if (!in_x_.at(x)) throw Error(Errc::NotInX, "vertex " + std::to_string(x));
  auto it = incidences_[x].find(l);
  if (it == incidences_[x].end()) {
    throw Error(Errc::StaleLabel, "label " + std::to_string(l) + " not incident to " + std::to_string(x));
  }
  return it->second;
}

const PSet& DynCvdKernel::plus(Vertex x, ClusterLabel l) const { return incidence(x, l).plus; }
const PSet& DynCvdKernel::minus(Vertex x, ClusterLabel l) const { return incidence(x, l).minus; }

void DynCvdKernel::add_to_x(Vertex u) {
  if (in_x_.at(u)) throw Error(Errc::NotFree, "vertex " + std::to_string(u) + " already in X");
  const ClusterLabel l = label_[u];
  PSet& members = clusters_.at(l);
  members = members.remove(u);
  for (Vertex x : x_) {
    auto it = incidences_[x].find(l);
    if (it == incidences_[x].end()) continue;
    if (g_.has_edge(x, u)) {
      it->second.plus = it->second.plus.remove(u);
      if (it->second.plus.empty()) incidences_[x].erase(it);
    } else {
      it->second.minus = it->second.minus.remove(u);
    }
  }
  x_.insert(u);
  in_x_[u] = true;
  label_[u] = 0;
  incidences_[u].clear();
  if (!members.empty()) {
    incidences_[u].emplace(l, Incidence{members.copy(), PSet{}});
  } else {
    clusters_.erase(l);
  }
  peak_ = std::max(peak_, x_.size());
}

void DynCvdKernel::remove_from_x(Vertex y) {
  if (!in_x_.at(y)) throw Error(Errc::NotInX, "vertex " + std::to_string(y));
  auto& adjacent = incidences_[y];
  if (adjacent.size() > 1) {
    throw Error(Errc::AssumptionViolated, "vertex " + std::to_string(y) + " touches " +
                                              std::to_string(adjacent.size()) + " clusters");
  }
  if (adjacent.size() == 1 && !adjacent.begin()->second.minus.empty()) {
    throw Error(Errc::AssumptionViolated, "vertex " + std::to_string(y) + " misses part of its cluster");
  }
  if (checked_) {
    std::vector<bool> alive(g_.vertex_count(), true);
    for (Vertex x : x_) alive[x] = x == y;
    if (find_induced_p3(g_, alive)) {
      throw InvariantError("X \\ {" + std::to_string(y) + "} is not a cluster vertex deletion");
    }
  }

  ClusterLabel l;
  if (adjacent.empty()) {
    l = next_label_++;
    clusters_.emplace(l, PSet{}.insert(y));
  } else {
    l = adjacent.begin()->first;
    clusters_.at(l) = clusters_.at(l).insert(y);
  }
  adjacent.clear();
  x_.erase(y);
  in_x_[y] = false;
  label_[y] = l;

  const PSet& members = clusters_.at(l);
  for (Vertex x : x_) {
    const bool edge = g_.has_edge(x, y);
    auto it = incidences_[x].find(l);
    if (it != incidences_[x].end()) {
      if (edge) {
        it->second.plus = it->second.plus.insert(y);
      } else {
        it->second.minus = it->second.minus.insert(y);
      }
    } else if (edge) {
      incidences_[x].emplace(l, Incidence{PSet{}.insert(y), members.copy().remove(y)});
    }
  }
}

Kernel DynCvdKernel::kernel() const {
  Kernel k;
  const std::size_t sample = x_.size() + 1;
  std::vector<Vertex> reduced;
  for (Vertex x : x_) {
    if (incidences_[x].size() > sample) {
      k.forced.push_back(x);
      continue;
    }
    reduced.push_back(x);
    for (const auto& [l, inc] : incidences_[x]) {
      for (Vertex v : inc.plus.take(sample)) reduced.push_back(v);
      for (Vertex v : inc.minus.take(sample)) reduced.push_back(v);
    }
  }
  k.reduced = g_.induced(sorted_unique(std::move(reduced)));
  return k;
}

void DynCvdKernel::replace_solution(const VertexSet& target) {
  std::vector<Vertex> removals;
  for (Vertex x : x_) {
    if (!std::binary_search(target.begin(), target.end(), x)) removals.push_back(x);
  }
  for (Vertex v : target) {
    if (!in_x_[v]) add_to_x(v);
  }
  for (Vertex y : removals) remove_from_x(y);
}

void DynCvdKernel::compress() {
  const Kernel k = kernel();
  const VertexSet y = k.reduced.to_original(cvd_3approx(k.reduced.graph));
  if (y.size() > x_.size() - k.forced.size()) return;
  VertexSet target = k.forced;
  target.insert(target.end(), y.begin(), y.end());
  replace_solution(sorted_unique(std::move(target)));
}

void DynCvdKernel::update(const EdgeOp& op) {
  g_.validate(op);
  peak_ = x_.size();
  for (Vertex v : {std::min(op.u, op.v), std::max(op.u, op.v)}) {
    if (!in_x_[v]) add_to_x(v);
  }
  g_.apply(op);
  compress();
}

VertexSet DynCvdKernel::query() const {
  const Kernel k = kernel();
  const auto y = cvd_exact(k.reduced.graph, x_.size() - k.forced.size());
  if (!y) throw InvariantError("kernel has no cluster deletion within |X \\ X0|");
  VertexSet out = k.forced;
  const VertexSet mapped = k.reduced.to_original(*y);
  out.insert(out.end(), mapped.begin(), mapped.end());
  return sorted_unique(std::move(out));
}

}  // namespace dynfpt
