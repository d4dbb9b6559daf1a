#include "dynfpt/pset.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace dynfpt {

namespace {

std::atomic<std::uint64_t> g_allocated{0};

}  // namespace

std::uint64_t PSet::allocated_nodes() { return g_allocated.load(std::memory_order_relaxed); }

namespace {

template <typename P>
int height_of(const P& n) {
  return n ? n->height : 0;
}

template <typename P>
std::size_t size_of(const P& n) {
  return n ? n->size : 0;
}

}  // namespace

std::size_t PSet::size() const { return size_of(root_); }

bool PSet::contains(Vertex x) const {
  const Node* n = root_.get();
  while (n != nullptr) {
    if (x == n->key) return true;
    n = x < n->key ? n->left.get() : n->right.get();
  }
  return false;
}

PSet::NodePtr PSet::make(NodePtr left, Vertex key, NodePtr right) {
  g_allocated.fetch_add(1, std::memory_order_relaxed);
  const int h = 1 + std::max(height_of(left), height_of(right));
  const std::size_t s = 1 + size_of(left) + size_of(right);
  return std::make_shared<const Node>(Node{std::move(left), std::move(right), key, h, s});
}

PSet::NodePtr PSet::balance(NodePtr left, Vertex key, NodePtr right) {
  const int hl = height_of(left);
  const int hr = height_of(right);
  if (hl > hr + 1) {
    const Node& l = *left;
    if (height_of(l.left) >= height_of(l.right)) {
      return make(l.left, l.key, make(l.right, key, std::move(right)));
    }
    const Node& lr = *l.right;
    return make(make(l.left, l.key, lr.left), lr.key, make(lr.right, key, std::move(right)));
  }
  if (hr > hl + 1) {
    const Node& r = *right;
    if (height_of(r.right) >= height_of(r.left)) {
      return make(make(std::move(left), key, r.left), r.key, r.right);
    }
    const Node& rl = *r.left;
    return make(make(std::move(left), key, rl.left), rl.key, make(rl.right, r.key, r.right));
  }
  return make(std::move(left), key, std::move(right));
}

PSet::NodePtr PSet::insert_at(const NodePtr& n, Vertex x) {
  if (!n) return make(nullptr, x, nullptr);
  if (x < n->key) return balance(insert_at(n->left, x), n->key, n->right);
  return balance(n->left, n->key, insert_at(n->right, x));
}

PSet::NodePtr PSet::remove_min(const NodePtr& n, Vertex& min_key) {
  if (!n->left) {
    min_key = n->key;
    return n->right;
  }
  return balance(remove_min(n->left, min_key), n->key, n->right);
}

PSet::NodePtr PSet::remove_at(const NodePtr& n, Vertex x) {
  if (x < n->key) return balance(remove_at(n->left, x), n->key, n->right);
  if (x > n->key) return balance(n->left, n->key, remove_at(n->right, x));
  if (!n->left) return n->right;
  if (!n->right) return n->left;
  Vertex successor{};
  NodePtr right = remove_min(n->right, successor);
  return balance(n->left, successor, std::move(right));
}

PSet PSet::insert(Vertex x) const {
  if (contains(x)) throw Error(Errc::DuplicateElement, "vertex " + std::to_string(x) + " already in set");
  return PSet(insert_at(root_, x));
}

PSet PSet::remove(Vertex x) const {
  if (!contains(x)) throw Error(Errc::MissingElement, "vertex " + std::to_string(x) + " not in set");
  return PSet(remove_at(root_, x));
}

std::vector<Vertex> PSet::take(std::size_t k) const {
  std::vector<Vertex> out;
  out.reserve(std::min(k, size()));
  // Iterative in-order walk that stops after k elements.
  std::vector<const Node*> stack;
  const Node* cur = root_.get();
  while (out.size() < k && (cur != nullptr || !stack.empty())) {
    while (cur != nullptr) {
      stack.push_back(cur);
      cur = cur->left.get();
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur->key);
    cur = cur->right.get();
  }
  return out;
}

}  // namespace dynfpt
