#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dynfpt/graph.hpp"

namespace dynfpt::testing {

// Random valid edge updates against a shadow graph. Inserts are drawn with
// probability insert_bias when possible; an optional degree cap keeps every
// vertex degree at or below max_degree.
class StreamGen {
 public:
  StreamGen(std::size_t n, std::uint32_t seed, double insert_bias = 0.6,
            std::optional<std::size_t> max_degree = std::nullopt)
      : shadow_(n), rng_(seed), bias_(insert_bias), cap_(max_degree) {}

  EdgeOp next() {
    const auto n = static_cast<Vertex>(shadow_.vertex_count());
    std::bernoulli_distribution coin(bias_);
    const bool want_insert = shadow_.edge_count() == 0 || coin(rng_);
    if (want_insert) {
      std::vector<std::pair<Vertex, Vertex>> free;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (shadow_.has_edge(u, v)) continue;
          if (cap_ && (shadow_.degree(u) >= *cap_ || shadow_.degree(v) >= *cap_)) continue;
          free.emplace_back(u, v);
        }
      }
      if (!free.empty()) {
        auto [u, v] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng_)];
        EdgeOp op = EdgeOp::insert(u, v);
        shadow_.apply(op);
        return op;
      }
    }
    const auto edges = shadow_.edges();
    auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng_)];
    EdgeOp op = EdgeOp::erase(u, v);
    shadow_.apply(op);
    return op;
  }

  const Graph& graph() const { return shadow_; }
  std::mt19937& rng() { return rng_; }

 private:
  Graph shadow_;
  std::mt19937 rng_;
  double bias_;
  std::optional<std::size_t> cap_;
};

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Disjoint cliques of random sizes plus k vertices wired at random, so the
// cluster deletion number is at most k.
inline Graph planted_cluster_graph(std::size_t n, std::size_t k, std::mt19937& rng) {
  Graph g(n);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::size_t i = k;
  while (i < n) {
    const std::size_t end = std::min(n, i + size(rng));
    for (std::size_t a = i; a < end; ++a) {
      for (std::size_t b = a + 1; b < end; ++b) g.add_edge(order[a], order[b]);
    }
    i = end;
  }
  std::bernoulli_distribution coin(0.25);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (order[a] != order[b] && !g.has_edge(order[a], order[b]) && coin(rng)) g.add_edge(order[a], order[b]);
    }
  }
  return g;
}

inline Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace dynfpt::testing
