#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

namespace {

// Local multigraph with vertex deletion; small enough to copy per branch.
struct FvsInstance {
  std::vector<std::map<int, int>> adj;  // neighbor -> multiplicity; loops as adj[v][v]
  std::vector<bool> alive;
  std::vector<bool> forbidden;

  int degree(int v) const {
    int d = 0;
    for (auto [w, m] : adj[v]) {
      if (alive[w]) d += (w == v ? 2 * m : m);
    }
    return d;
  }

  void erase(int v) { alive[v] = false; }
};

// Shortest cycle among alive vertices as a vertex list, or empty if acyclic.
std::vector<int> shortest_cycle(const FvsInstance& g) {
  const int n = static_cast<int>(g.adj.size());
  for (int v = 0; v < n; ++v) {
    if (!g.alive[v]) continue;
    for (auto [w, m] : g.adj[v]) {
      if (!g.alive[w]) continue;
      if (w == v) return {v};
      if (m >= 2) return {v, w};
    }
  }
  std::vector<int> best;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    if (!g.alive[s]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    parent[s] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (!best.empty() && 2 * dist[u] + 1 >= static_cast<int>(best.size())) break;
      for (auto [w, m] : g.adj[u]) {
        if (!g.alive[w] || w == parent[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        const int len = dist[u] + dist[w] + 1;
        if (!best.empty() && len >= static_cast<int>(best.size())) continue;
        // Walk both tree paths up to their meeting point.
        std::vector<int> left, right;
        int a = u, b = w;
        while (dist[a] > dist[b]) left.push_back(a), a = parent[a];
        while (dist[b] > dist[a]) right.push_back(b), b = parent[b];
        while (a != b) {
          left.push_back(a);
          right.push_back(b);
          a = parent[a];
          b = parent[b];
        }
        left.push_back(a);
        left.insert(left.end(), right.rbegin(), right.rend());
        if (best.empty() || left.size() < best.size()) best = std::move(left);
      }
    }
  }
  return best;
}

bool search(FvsInstance g, std::size_t budget, std::vector<int>& chosen) {
  // Drop vertices of degree <= 1; take free vertices carrying a self-loop.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(g.adj.size()); ++v) {
      if (!g.alive[v]) continue;
      auto loop = g.adj[v].find(v);
      if (loop != g.adj[v].end() && loop->second > 0) {
        if (g.forbidden[v] || budget == 0) return false;
        g.erase(v);
        chosen.push_back(v);
        --budget;
        changed = true;
      } else if (g.degree(v) <= 1) {
        g.erase(v);
        changed = true;
      }
    }
  }
  const std::vector<int> cycle = shortest_cycle(g);
  if (cycle.empty()) return true;
  if (budget == 0) return false;
  for (int v : cycle) {
    if (g.forbidden[v]) continue;
    FvsInstance next = g;
    next.erase(v);
    chosen.push_back(v);
    const std::size_t mark = chosen.size();
    if (search(std::move(next), budget - 1, chosen)) return true;
    chosen.resize(mark - 1);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> disjoint_fvs(const Multigraph& g, std::span<const Vertex> forbidden,
                                      std::size_t budget) {
  std::unordered_map<Vertex, int> local;
  FvsInstance inst;
  const int n = static_cast<int>(g.vertices.size());
  inst.adj.resize(n);
  inst.alive.assign(n, true);
  inst.forbidden.assign(n, false);
  for (int i = 0; i < n; ++i) local.emplace(g.vertices[i], i);
  for (const auto& [e, m] : g.edges) {
    const int a = local.at(e.first), b = local.at(e.second);
    inst.adj[a][b] += m;
    if (a != b) inst.adj[b][a] += m;
  }
  for (Vertex s : forbidden) {
    auto it = local.find(s);
    if (it != local.end()) inst.forbidden[it->second] = true;
  }
  // Iterative deepening makes the first success a minimum.
  for (std::size_t k = 0; k <= budget; ++k) {
    std::vector<int> chosen;
    if (search(inst, k, chosen)) {
      VertexSet out;
      for (int v : chosen) out.push_back(g.vertices[v]);
      return sorted_unique(std::move(out));
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> fvs_exact(const Graph& g, std::optional<std::size_t> budget) {
  Multigraph mg;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) mg.add_vertex(v);
  for (auto [u, v] : g.edges()) mg.add_edge(u, v);
  return disjoint_fvs(mg, {}, budget.value_or(g.vertex_count()));
}

}  // namespace dynfpt
