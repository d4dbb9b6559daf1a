#include "dynfpt/dyn_fvs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

namespace {

// Marks a vertex set in the forest for the lifetime of the guard.
class ForestMarks {
 public:
  ForestMarks(LinkCutForest& forest, const VertexSet& marked) : forest_(forest), marked_(marked) {
    for (Vertex v : marked_) forest_.set_mark(v, true);
  }
  ~ForestMarks() {
    for (Vertex v : marked_) forest_.set_mark(v, false);
  }
  ForestMarks(const ForestMarks&) = delete;
  ForestMarks& operator=(const ForestMarks&) = delete;

 private:
  LinkCutForest& forest_;
  const VertexSet& marked_;
};

}  // namespace

DynFvs::DynFvs(std::size_t n, std::size_t max_degree)
    : g_(n), d_(max_degree), in_x_(n, false), forest_(n) {}

DynFvs DynFvs::with_solution(const Graph& g, std::span<const Vertex> x, std::size_t max_degree) {
  if (!is_feedback_vertex_set(g, x)) throw Error(Errc::AssumptionViolated, "initial set is not a feedback vertex set");
  DynFvs st(g.vertex_count(), max_degree);
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (g.degree(v) > max_degree) {
      throw Error(Errc::DegreeBoundExceeded, "vertex " + std::to_string(v) + " has degree " +
                                                  std::to_string(g.degree(v)));
    }
  }
  st.g_ = g;
  for (Vertex v : x) {
    st.x_.insert(v);
    st.in_x_.at(v) = true;
  }
  for (auto [u, v] : g.edges()) {
    if (st.in_x_[u] || st.in_x_[v]) continue;
    st.forest_.evert(u);
    st.forest_.link(u, v);
  }
  return st;
}

void DynFvs::move_to_x(Vertex v) {
  for (Vertex w : g_.neighbors(v)) {
    if (!in_x_[w]) forest_.cut(v, w);
  }
  x_.insert(v);
  in_x_[v] = true;
}

void DynFvs::remove_from_x(Vertex u) {
  x_.erase(u);
  in_x_[u] = false;
  for (Vertex w : g_.neighbors(u)) {
    if (in_x_[w]) continue;
    if (forest_.connected(u, w)) throw InvariantError("releasing " + std::to_string(u) + " closes a cycle");
    forest_.evert(w);
    forest_.link(w, u);
  }
}

void DynFvs::update(const EdgeOp& op) {
  g_.validate(op);
  if (op.is_insert()) {
    for (Vertex v : {op.u, op.v}) {
      if (g_.degree(v) + 1 > d_) {
        throw Error(Errc::DegreeBoundExceeded, "vertex " + std::to_string(v) + " would exceed degree " +
                                                    std::to_string(d_));
      }
    }
    if (!in_x_[op.u] && !in_x_[op.v]) move_to_x(std::min(op.u, op.v));
    g_.apply(op);
  } else {
    if (!in_x_[op.u] && !in_x_[op.v]) forest_.cut(op.u, op.v);
    g_.apply(op);
  }
  compress();
  if (checked_) {
    std::vector<std::pair<Vertex, Vertex>> expected;
    for (auto [u, v] : g_.edges()) {
      if (!in_x_[u] && !in_x_[v]) expected.emplace_back(u, v);
    }
    if (forest_.edges() != expected) throw InvariantError("forest does not mirror G[V \\ X]");
  }
}

void DynFvs::compress() {
  const VertexSet x(x_.begin(), x_.end());
  const std::size_t k = x.size();
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  VertexSet best = x;
  for (std::uint32_t mask : masks) {
    const std::size_t kept = std::popcount(mask);
    if (kept + 1 > best.size()) continue;
    VertexSet r;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) r.push_back(x[i]);
    }
    auto extra = solve_disjoint(r, best.size() - kept - 1);
    if (!extra) continue;
    r.insert(r.end(), extra->begin(), extra->end());
    best = sorted_unique(std::move(r));
  }
  if (best == x) return;
  if (checked_ && !is_feedback_vertex_set(g_, best)) throw InvariantError("compression produced a non-solution");

  for (Vertex v : best) {
    if (!in_x_[v]) move_to_x(v);
  }
  for (Vertex v : x) {
    if (!std::binary_search(best.begin(), best.end(), v)) remove_from_x(v);
  }
}

void DynFvs::check_subset(std::span<const Vertex> r) const {
  for (Vertex v : r) {
    if (v < 0 || v >= static_cast<Vertex>(g_.vertex_count()) || !in_x_[v]) {
      throw Error(Errc::NotInX, "vertex " + std::to_string(v));
    }
  }
}

ReducedGraph DynFvs::build_reduced(std::span<const Vertex> r) {
  check_subset(r);
  ReducedGraph out;
  const VertexSet kept = sorted_unique({r.begin(), r.end()});
  for (Vertex x : x_) {
    if (!std::binary_search(kept.begin(), kept.end(), x)) out.protected_set.push_back(x);
  }
  const VertexSet& s = out.protected_set;

  struct Attachment {
    Vertex s;
    Vertex a;
  };
  std::vector<Attachment> att;
  for (Vertex x : s) {
    for (Vertex a : g_.neighbors(x)) {
      if (!in_x_[a]) att.push_back({x, a});
    }
  }
  // Group attachments by forest tree.
  std::vector<int> tree(att.size(), -1);
  int trees = 0;
  for (std::size_t i = 0; i < att.size(); ++i) {
    if (tree[i] >= 0) continue;
    tree[i] = trees;
    for (std::size_t j = i + 1; j < att.size(); ++j) {
      if (tree[j] < 0 && forest_.connected(att[i].a, att[j].a)) tree[j] = trees;
    }
    ++trees;
  }
  std::vector<int> tree_size(trees, 0);
  for (int t : tree) ++tree_size[t];

  // The meet of any three attachments is the meeting point of two of them as
  // seen from any fixed attachment, so pairs against the tree's first
  // attachment give every core vertex.
  std::vector<Vertex> core;
  std::vector<bool> anchored(trees, false);
  for (std::size_t i = 0; i < att.size(); ++i) {
    if (tree_size[tree[i]] < 3 || anchored[tree[i]]) continue;
    anchored[tree[i]] = true;
    for (std::size_t j = i + 1; j < att.size(); ++j) {
      if (tree[j] != tree[i]) continue;
      for (std::size_t k = j + 1; k < att.size(); ++k) {
        if (tree[k] == tree[i]) core.push_back(forest_.meet(att[i].a, att[j].a, att[k].a));
      }
    }
  }
  out.core = sorted_unique(std::move(core));
  const VertexSet& c = out.core;

  for (Vertex v : s) out.graph.add_vertex(v);
  for (Vertex v : c) out.graph.add_vertex(v);
  auto add = [&](Vertex u, Vertex v, ReducedGraph::Source src) {
    out.graph.add_edge(u, v);
    out.provenance.push_back({std::min(u, v), std::max(u, v), src});
  };

  // A tree path is kept when no other core lies on it.
  const ForestMarks marks(forest_, c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!forest_.connected(c[i], c[j])) continue;
      if (forest_.marked_on_path(c[i], c[j]) == 2) add(c[i], c[j], ReducedGraph::Source::CoreCore);
    }
  }

  for (const auto& [x, a] : att) {
    if (std::binary_search(c.begin(), c.end(), a)) {
      add(x, a, ReducedGraph::Source::SolutionCore);
      continue;
    }
    for (Vertex v : c) {
      if (forest_.connected(a, v) && forest_.marked_on_path(a, v) == 1) {
        add(x, v, ReducedGraph::Source::SolutionCore);
        break;
      }
    }
  }

  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g_.has_edge(s[i], s[j])) add(s[i], s[j], ReducedGraph::Source::SolutionEdge);
    }
  }
  for (std::size_t i = 0; i < att.size(); ++i) {
    for (std::size_t j = i + 1; j < att.size(); ++j) {
      if (tree[i] == tree[j] && tree_size[tree[i]] == 2) add(att[i].s, att[j].s, ReducedGraph::Source::SolutionPath);
    }
  }
  return out;
}

std::optional<ReducedGraph> DynFvs::reduce(std::span<const Vertex> r) {
  check_subset(r);
  if (sorted_unique({r.begin(), r.end()}).size() == x_.size()) {
    ReducedGraph empty;
    return empty;
  }
  ReducedGraph out = build_reduced(r);
  if (out.graph.vertices.size() >= 14 * out.protected_set.size()) return std::nullopt;
  return out;
}

std::optional<VertexSet> DynFvs::solve_disjoint(std::span<const Vertex> r, std::size_t budget) {
  auto reduced = reduce(r);
  if (!reduced) return std::nullopt;
  if (reduced->protected_set.empty()) return VertexSet{};
  return disjoint_fvs(reduced->graph, reduced->protected_set, budget);
}

}  // namespace dynfpt
