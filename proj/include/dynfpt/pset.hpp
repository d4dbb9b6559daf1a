#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dynfpt/graph.hpp"

namespace dynfpt {

// Persistent ordered set of vertex ids. A PSet is a value: copying it is O(1)
// and shares every node; insert/remove copy only the O(log n) nodes on the
// search path, so every older version stays valid and unchanged.
//
// Backed by an AVL tree whose nodes are immutable once built.
class PSet {
 public:
  PSet() = default;

  std::size_t size() const;
  bool empty() const { return root_ == nullptr; }
  bool contains(Vertex x) const;

  // Throw DuplicateElement / MissingElement.
  [[nodiscard]] PSet insert(Vertex x) const;
  [[nodiscard]] PSet remove(Vertex x) const;

  // Shares the whole version.
  [[nodiscard]] PSet copy() const { return *this; }

  // The min(k, size()) smallest elements, ascending.
  std::vector<Vertex> take(std::size_t k) const;
  std::vector<Vertex> to_vector() const { return take(size()); }

  template <typename F>
  void for_each(F&& f) const {
    visit(root_.get(), f);
  }

  // Total nodes ever allocated by any PSet in this process.
  static std::uint64_t allocated_nodes();

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  explicit PSet(NodePtr root) : root_(std::move(root)) {}

  template <typename F>
  static void visit(const Node* n, F& f);

  static NodePtr make(NodePtr left, Vertex key, NodePtr right);
  static NodePtr balance(NodePtr left, Vertex key, NodePtr right);
  static NodePtr insert_at(const NodePtr& n, Vertex x);
  static NodePtr remove_at(const NodePtr& n, Vertex x);
  static NodePtr remove_min(const NodePtr& n, Vertex& min_key);

  NodePtr root_;
};

struct PSet::Node {
  NodePtr left;
  NodePtr right;
  Vertex key;
  int height;
  std::size_t size;
};

template <typename F>
void PSet::visit(const Node* n, F& f) {
  while (n != nullptr) {
    visit(n->left.get(), f);
    f(n->key);
    n = n->right.get();
  }
}

}  // namespace dynfpt
