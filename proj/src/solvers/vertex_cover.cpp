#include <algorithm>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

VertexSet vc_2approx(const Graph& g) {
  std::vector<bool> matched(g.vertex_count(), false);
  VertexSet cover;
  for (auto [u, v] : g.edges()) {
    if (matched[u] || matched[v]) continue;
    matched[u] = matched[v] = true;
    cover.push_back(u);
    cover.push_back(v);
  }
  return sorted_unique(std::move(cover));
}

namespace {

// Branch and bound over a shrinking vertex set with an undo trail.
class VcSearch {
 public:
  explicit VcSearch(const Graph& g) : adj_(g.vertex_count()), alive_(g.vertex_count(), true), deg_(g.vertex_count()) {
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
      deg_[v] = static_cast<int>(adj_[v].size());
      edges_ += adj_[v].size();
    }
    edges_ /= 2;
  }

  std::optional<VertexSet> run(std::size_t limit) {
    best_limit_ = limit + 1;
    search();
    if (!found_) return std::nullopt;
    return sorted_unique(best_);
  }

 private:
  void take(Vertex v) {
    alive_[v] = false;
    for (Vertex w : adj_[v]) {
      if (alive_[w]) {
        --deg_[w];
        --edges_;
      }
    }
    chosen_.push_back(v);
    trail_.push_back(v);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Vertex v = trail_.back();
      trail_.pop_back();
      chosen_.pop_back();
      alive_[v] = true;
      for (Vertex w : adj_[v]) {
        if (alive_[w]) {
          ++deg_[w];
          ++edges_;
        }
      }
    }
  }

  std::size_t matching_lower_bound() const {
    std::vector<bool> used(adj_.size(), false);
    std::size_t lb = 0;
    for (Vertex u = 0; u < static_cast<Vertex>(adj_.size()); ++u) {
      if (!alive_[u] || used[u] || deg_[u] == 0) continue;
      for (Vertex w : adj_[u]) {
        if (alive_[w] && !used[w]) {
          used[u] = used[w] = true;
          ++lb;
          break;
        }
      }
    }
    return lb;
  }

  void search() {
    const std::size_t mark = trail_.size();
    // Degree-1 rule: the neighbor of a pendant vertex is always safe to take.
    for (bool changed = true; changed && chosen_.size() < best_limit_;) {
      changed = false;
      for (Vertex v = 0; v < static_cast<Vertex>(adj_.size()); ++v) {
        if (!alive_[v] || deg_[v] != 1) continue;
        for (Vertex w : adj_[v]) {
          if (alive_[w]) {
            take(w);
            break;
          }
        }
        changed = true;
      }
    }
    if (edges_ == 0) {
      if (chosen_.size() < best_limit_) {
        best_ = chosen_;
        best_limit_ = chosen_.size();
        found_ = true;
      }
      undo_to(mark);
      return;
    }
    if (chosen_.size() + matching_lower_bound() >= best_limit_) {
      undo_to(mark);
      return;
    }
    Vertex pivot = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(adj_.size()); ++v) {
      if (alive_[v] && (pivot < 0 || deg_[v] > deg_[pivot])) pivot = v;
    }
    const std::size_t before = trail_.size();
    take(pivot);
    search();
    undo_to(before);

    std::vector<Vertex> nbrs;
    for (Vertex w : adj_[pivot]) {
      if (alive_[w]) nbrs.push_back(w);
    }
    if (chosen_.size() + nbrs.size() < best_limit_) {
      for (Vertex w : nbrs) take(w);
      search();
      undo_to(before);
    }
    undo_to(mark);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> alive_;
  std::vector<int> deg_;
  std::size_t edges_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> trail_;
  std::vector<Vertex> best_;
  std::size_t best_limit_ = 0;
  bool found_ = false;
};

}  // namespace

std::optional<VertexSet> vc_exact(const Graph& g, std::optional<std::size_t> budget) {
  const std::size_t limit = budget.value_or(g.vertex_count());
  return VcSearch(g).run(limit);
}

}  // namespace dynfpt
