#include "dynfpt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace dynfpt {

Graph::Graph(std::size_t n) : adj_(n) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adj_.size()) {
    throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " not in 0.." +
                                      std::to_string(adj_.size()));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  return a.size() <= b.size() ? a.contains(v) : b.contains(u);
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

void Graph::validate(const EdgeOp& op) const {
  check_vertex(op.u);
  check_vertex(op.v);
  if (op.u == op.v) throw Error(Errc::SelfLoop, "edge {" + std::to_string(op.u) + "," + std::to_string(op.v) + "}");
  const bool present = adj_[op.u].contains(op.v);
  const std::string name = "{" + std::to_string(op.u) + "," + std::to_string(op.v) + "}";
  if (op.is_insert() && present) throw Error(Errc::DuplicateEdge, "edge " + name + " already present");
  if (!op.is_insert() && !present) throw Error(Errc::MissingEdge, "edge " + name + " not present");
}

void Graph::add_edge(Vertex u, Vertex v) { apply(EdgeOp::insert(u, v)); }
void Graph::remove_edge(Vertex u, Vertex v) { apply(EdgeOp::erase(u, v)); }

void Graph::apply(const EdgeOp& op) {
  validate(op);
  if (op.is_insert()) {
    adj_[op.u].insert(op.v);
    adj_[op.v].insert(op.u);
    ++m_;
  } else {
    adj_[op.u].erase(op.v);
    adj_[op.v].erase(op.u);
    --m_;
  }
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < static_cast<Vertex>(adj_.size()); ++u) {
    for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) out.emplace_back(u, *it);
  }
  return out;
}

InducedSubgraph Graph::induced(std::span<const Vertex> s) const {
  InducedSubgraph out{Graph(s.size()), {s.begin(), s.end()}};
  std::unordered_map<Vertex, Vertex> local;
  local.reserve(s.size() * 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_vertex(s[i]);
    if (!local.emplace(s[i], static_cast<Vertex>(i)).second) {
      throw Error(Errc::DuplicateElement, "vertex " + std::to_string(s[i]) + " listed twice");
    }
  }
  // Pick per vertex whichever is cheaper: scanning its adjacency or probing
  // every other member of s.
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& nb = adj_[s[i]];
    if (nb.size() <= s.size()) {
      for (Vertex w : nb) {
        auto it = local.find(w);
        if (it != local.end() && static_cast<std::size_t>(it->second) > i) {
          out.graph.add_edge(static_cast<Vertex>(i), it->second);
        }
      }
    } else {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (nb.contains(s[j])) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

VertexSet InducedSubgraph::to_original(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(original.at(v));
  return sorted_unique(std::move(out));
}

std::optional<P3> find_induced_p3(const Graph& g, const std::vector<bool>& alive) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex b = 0; b < n; ++b) {
    if (!alive[b]) continue;
    const auto& nb = g.neighbors(b);
    for (auto ia = nb.begin(); ia != nb.end(); ++ia) {
      if (!alive[*ia]) continue;
      const auto& na = g.neighbors(*ia);
      for (auto ic = std::next(ia); ic != nb.end(); ++ic) {
        if (alive[*ic] && !na.contains(*ic)) return P3{*ia, b, *ic};
      }
    }
  }
  return std::nullopt;
}

std::optional<P3> find_induced_p3(const Graph& g) {
  return find_induced_p3(g, std::vector<bool>(g.vertex_count(), true));
}

bool is_cluster_graph(const Graph& g) { return !find_induced_p3(g).has_value(); }

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : cover) in.at(v) = true;
  for (auto [u, v] : g.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

bool is_cluster_deletion(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> alive(g.vertex_count(), true);
  for (Vertex v : removed) alive.at(v) = false;
  return !find_induced_p3(g, alive).has_value();
}

bool is_feedback_vertex_set(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  for (Vertex v : removed) alive.at(v) = false;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    if (!alive[u] || !alive[v]) continue;
    Vertex ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

VertexSet sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace dynfpt
