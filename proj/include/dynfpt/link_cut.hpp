#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dynfpt/graph.hpp"

namespace dynfpt {

// Rooted dynamic forest over vertices 0..n-1 (Sleator-Tarjan link-cut trees,
// splay-based, with lazy path reversal for evert). All operations are
// amortized O(log n). Even queries restructure the auxiliary trees, so the
// object is not safe for concurrent reads.
class LinkCutForest {
 public:
  explicit LinkCutForest(std::size_t n = 0);

  std::size_t vertex_count() const { return nodes_.size(); }

  // r must be the root of its tree and v must lie in another tree; r becomes a
  // child of v.
  void link(Vertex r, Vertex v);
  // Removes the forest edge {u, v}, whichever endpoint is the parent. The part
  // holding the old root keeps it; the other part is rooted at the child.
  void cut(Vertex u, Vertex v);

  void evert(Vertex v);
  Vertex root(Vertex v);
  std::optional<Vertex> parent(Vertex v);
  Vertex nca(Vertex u, Vertex v);
  // nca(v, w) after evert(u): where the paths v->u and w->u first meet.
  Vertex meet(Vertex u, Vertex v, Vertex w);
  bool connected(Vertex u, Vertex v);

  // Marked vertices on the forest path between u and v, endpoints included.
  // Reroots the tree at u.
  void set_mark(Vertex v, bool on);
  bool marked(Vertex v) const;
  int marked_on_path(Vertex u, Vertex v);

  // Forest edges as (min, max) pairs, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges();

 private:
  struct Node {
    int parent = -1;  // splay parent or path-parent
    int child[2] = {-1, -1};
    bool flip = false;
    bool mark = false;
    int marked = 0;  // marks in this splay subtree
  };

  void check(Vertex v) const;
  bool is_splay_root(int x) const;
  void push(int x);
  void pull(int x);
  void rotate(int x);
  void splay(int x);
  int access(int x);
  int find_root(int x);

  std::vector<Node> nodes_;
  std::vector<int> splay_path_;
};

}  // namespace dynfpt
