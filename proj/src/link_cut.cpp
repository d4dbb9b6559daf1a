#include "dynfpt/link_cut.hpp"

#include <algorithm>
#include <string>

namespace dynfpt {

LinkCutForest::LinkCutForest(std::size_t n) : nodes_(n) {}

void LinkCutForest::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= nodes_.size()) {
    throw Error(Errc::OutOfRange, "forest vertex " + std::to_string(v));
  }
}

bool LinkCutForest::is_splay_root(int x) const {
  const int p = nodes_[x].parent;
  return p < 0 || (nodes_[p].child[0] != x && nodes_[p].child[1] != x);
}

void LinkCutForest::push(int x) {
  Node& n = nodes_[x];
  if (!n.flip) return;
  std::swap(n.child[0], n.child[1]);
  for (int c : n.child) {
    if (c >= 0) nodes_[c].flip = !nodes_[c].flip;
  }
  n.flip = false;
}

void LinkCutForest::pull(int x) {
  Node& n = nodes_[x];
  n.marked = n.mark ? 1 : 0;
  for (int c : n.child) {
    if (c >= 0) n.marked += nodes_[c].marked;
  }
}

void LinkCutForest::rotate(int x) {
  const int p = nodes_[x].parent;
  const int g = nodes_[p].parent;
  const int dir = nodes_[p].child[1] == x ? 1 : 0;
  const int moved = nodes_[x].child[dir ^ 1];
  if (!is_splay_root(p)) {
    nodes_[g].child[nodes_[g].child[1] == p ? 1 : 0] = x;
  }
  nodes_[x].parent = g;
  nodes_[x].child[dir ^ 1] = p;
  nodes_[p].parent = x;
  nodes_[p].child[dir] = moved;
  if (moved >= 0) nodes_[moved].parent = p;
  pull(p);
  pull(x);
}

void LinkCutForest::splay(int x) {
  // Push pending flips top-down along the splay path first.
  splay_path_.assign(1, x);
  for (int y = x; !is_splay_root(y); y = nodes_[y].parent) splay_path_.push_back(nodes_[y].parent);
  for (auto it = splay_path_.rbegin(); it != splay_path_.rend(); ++it) push(*it);

  while (!is_splay_root(x)) {
    const int p = nodes_[x].parent;
    if (!is_splay_root(p)) {
      const int g = nodes_[p].parent;
      const bool zigzig = (nodes_[g].child[1] == p) == (nodes_[p].child[1] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

int LinkCutForest::access(int x) {
  int last = -1;
  for (int y = x; y >= 0; y = nodes_[y].parent) {
    splay(y);
    nodes_[y].child[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
  return last;
}

int LinkCutForest::find_root(int x) {
  access(x);
  int r = x;
  for (;;) {
    push(r);
    if (nodes_[r].child[0] < 0) break;
    r = nodes_[r].child[0];
  }
  splay(r);
  return r;
}

void LinkCutForest::evert(Vertex v) {
  check(v);
  access(v);
  nodes_[v].flip = !nodes_[v].flip;
  push(v);
}

Vertex LinkCutForest::root(Vertex v) {
  check(v);
  return find_root(v);
}

bool LinkCutForest::connected(Vertex u, Vertex v) {
  check(u);
  check(v);
  return u == v || find_root(u) == find_root(v);
}

std::optional<Vertex> LinkCutForest::parent(Vertex v) {
  check(v);
  access(v);
  int p = nodes_[v].child[0];
  if (p < 0) return std::nullopt;
  for (;;) {
    push(p);
    if (nodes_[p].child[1] < 0) break;
    p = nodes_[p].child[1];
  }
  splay(p);
  return p;
}

void LinkCutForest::link(Vertex r, Vertex v) {
  check(r);
  check(v);
  if (find_root(r) != r) throw Error(Errc::NotARoot, "vertex " + std::to_string(r) + " is not a root");
  if (find_root(v) == r) throw Error(Errc::SameTree, std::to_string(r) + " and " + std::to_string(v));
  access(r);
  nodes_[r].parent = v;
}

void LinkCutForest::cut(Vertex u, Vertex v) {
  check(u);
  check(v);
  Vertex child;
  if (parent(v) == std::optional<Vertex>(u)) {
    child = v;
  } else if (parent(u) == std::optional<Vertex>(v)) {
    child = u;
  } else {
    throw Error(Errc::NoSuchForestEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  access(child);
  const int left = nodes_[child].child[0];
  nodes_[left].parent = -1;
  nodes_[child].child[0] = -1;
  pull(child);
}

void LinkCutForest::set_mark(Vertex v, bool on) {
  check(v);
  access(v);
  nodes_[v].mark = on;
  pull(v);
}

bool LinkCutForest::marked(Vertex v) const {
  check(v);
  return nodes_[v].mark;
}

int LinkCutForest::marked_on_path(Vertex u, Vertex v) {
  if (!connected(u, v)) {
    throw Error(Errc::DifferentTrees, std::to_string(u) + " and " + std::to_string(v));
  }
  evert(u);
  access(v);
  return nodes_[v].marked;
}

Vertex LinkCutForest::nca(Vertex u, Vertex v) {
  if (!connected(u, v)) {
    throw Error(Errc::DifferentTrees, std::to_string(u) + " and " + std::to_string(v));
  }
  access(u);
  return access(v);
}

Vertex LinkCutForest::meet(Vertex u, Vertex v, Vertex w) {
  if (!connected(u, v) || !connected(u, w)) {
    throw Error(Errc::DifferentTrees, "meet(" + std::to_string(u) + "," + std::to_string(v) + "," +
                                          std::to_string(w) + ")");
  }
  evert(u);
  return nca(v, w);
}

std::vector<std::pair<Vertex, Vertex>> LinkCutForest::edges() {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < static_cast<Vertex>(nodes_.size()); ++v) {
    if (auto p = parent(v)) out.emplace_back(std::min(v, *p), std::max(v, *p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dynfpt
