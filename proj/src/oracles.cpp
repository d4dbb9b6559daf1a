#include "dynfpt/oracles.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace dynfpt::oracle {

namespace {

void require(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(Errc::BudgetExceeded, std::string(what) + " oracle limited to " + std::to_string(cap) +
                                          " vertices, got " + std::to_string(n));
  }
}

bool covers(const Graph& g, const std::vector<bool>& gone) {
  for (auto [u, v] : g.edges()) {
    if (!gone[u] && !gone[v]) return false;
  }
  return true;
}

// Every component of the surviving graph is a clique.
bool clusters_remain(const Graph& g, const std::vector<bool>& gone) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbors(members[i])) {
        if (!gone[w] && comp[w] < 0) {
          comp[w] = s;
          members.push_back(w);
        }
      }
    }
    for (int a : members) {
      for (int b : members) {
        if (a != b && !g.has_edge(a, b)) return false;
      }
    }
  }
  return true;
}

// Surviving graph has no cycle: each component has one fewer edge than vertices.
bool acyclic_remains(const Graph& g, const std::vector<bool>& gone) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    std::size_t vertices = 0, degree_sum = 0;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++vertices;
      for (Vertex w : g.neighbors(u)) {
        if (gone[w]) continue;
        ++degree_sum;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (degree_sum / 2 != vertices - 1) return false;
  }
  return true;
}

// Smallest subset of pool whose removal satisfies ok, trying sizes 0..limit.
std::optional<std::size_t> smallest(const Graph& g, const std::vector<Vertex>& pool, std::size_t limit,
                                    const std::function<bool(const std::vector<bool>&)>& ok) {
  std::vector<bool> gone(g.vertex_count(), false);
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
    if (left == 0) return ok(gone);
    for (std::size_t i = from; i + left <= pool.size(); ++i) {
      gone[pool[i]] = true;
      const bool found = pick(i + 1, left - 1);
      gone[pool[i]] = false;
      if (found) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k <= std::min(limit, pool.size()); ++k) {
    if (pick(0, k)) return k;
  }
  return std::nullopt;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(g.vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

}  // namespace

std::size_t brute_vc(const Graph& g) {
  require(g.vertex_count(), Budget::kCover, "vertex cover");
  return *smallest(g, all_vertices(g), g.vertex_count(), [&](const auto& gone) { return covers(g, gone); });
}

std::size_t brute_cvd(const Graph& g) {
  require(g.vertex_count(), Budget::kCover, "cluster deletion");
  return *smallest(g, all_vertices(g), g.vertex_count(), [&](const auto& gone) { return clusters_remain(g, gone); });
}

std::optional<std::size_t> brute_cvd_upto(const Graph& g, std::size_t k) {
  return smallest(g, all_vertices(g), k, [&](const auto& gone) { return clusters_remain(g, gone); });
}

std::optional<std::size_t> brute_fvs(const Graph& g, std::span<const Vertex> allow) {
  require(g.vertex_count(), Budget::kColoring, "feedback vertex set");
  const std::vector<Vertex> pool = sorted_unique({allow.begin(), allow.end()});
  return smallest(g, pool, pool.size(), [&](const auto& gone) { return acyclic_remains(g, gone); });
}

std::size_t brute_fvs(const Graph& g) { return *brute_fvs(g, all_vertices(g)); }

std::optional<std::size_t> brute_fvs_upto(const Graph& g, std::size_t k, std::span<const Vertex> allow) {
  const std::vector<Vertex> pool = sorted_unique({allow.begin(), allow.end()});
  return smallest(g, pool, k, [&](const auto& gone) { return acyclic_remains(g, gone); });
}

std::size_t brute_chromatic(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  require(g.vertex_count(), Budget::kColoring, "chromatic number");
  if (n == 0) return 0;
  // Enumerate restricted-growth assignments, skipping any that put adjacent
  // vertices in one block or use more blocks than the best found so far.
  int best = n;
  std::vector<int> block(n, -1);
  std::function<void(int, int)> assign = [&](int v, int used) {
    if (used >= best) return;
    if (v == n) {
      best = used;
      return;
    }
    for (int b = 0; b <= used; ++b) {
      bool clash = false;
      for (int u = 0; u < v && !clash; ++u) clash = block[u] == b && g.has_edge(u, v);
      if (clash) continue;
      block[v] = b;
      assign(v + 1, std::max(used, b + 1));
    }
    block[v] = -1;
  };
  assign(0, 0);
  return static_cast<std::size_t>(best);
}

Multigraph to_multigraph(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (Vertex v : removed) gone.at(v) = true;
  Multigraph out;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!gone[v]) out.add_vertex(v);
  }
  for (auto [u, v] : g.edges()) {
    if (!gone[u] && !gone[v]) out.add_edge(u, v);
  }
  return out;
}

Multigraph naive_reduce(Multigraph g, std::span<const Vertex> protect) {
  require(g.vertices.size(), Budget::kReduction, "reduction");
  const VertexSet fixed = sorted_unique({protect.begin(), protect.end()});
  auto drop = [&](Vertex v) {
    for (auto it = g.edges.begin(); it != g.edges.end();) {
      it = (it->first.first == v || it->first.second == v) ? g.edges.erase(it) : std::next(it);
    }
    g.vertices.erase(std::find(g.vertices.begin(), g.vertices.end(), v));
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : g.vertices) {
      if (std::binary_search(fixed.begin(), fixed.end(), v) || g.multiplicity(v, v) > 0) continue;
      const int d = g.degree(v);
      if (d <= 1) {
        drop(v);
      } else if (d == 2) {
        std::vector<Vertex> ends;
        for (const auto& [e, m] : g.edges) {
          if (e.first != v && e.second != v) continue;
          for (int i = 0; i < m; ++i) ends.push_back(e.first == v ? e.second : e.first);
        }
        drop(v);
        g.add_edge(ends[0], ends[1]);
      } else {
        continue;
      }
      changed = true;
      break;
    }
  }
  return g;
}

}  // namespace dynfpt::oracle
