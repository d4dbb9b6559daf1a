#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "dynfpt/dyn_fvs.hpp"
#include "dynfpt/graph.hpp"
#include "dynfpt/multigraph.hpp"

// Exhaustive reference solvers for tests. They share no code with the library
// solvers beyond the graph container.
namespace dynfpt::oracle {

struct Budget {
  static constexpr std::size_t kCover = 12;      // vertex cover, cluster deletion
  static constexpr std::size_t kColoring = 10;   // chromatic number, feedback sets
  static constexpr std::size_t kReduction = 64;  // rule-based reduction
};

std::size_t brute_vc(const Graph& g);
std::size_t brute_cvd(const Graph& g);
// Smallest cluster deletion of size at most k on graphs of any size, by
// enumerating all subsets of size up to k.
std::optional<std::size_t> brute_cvd_upto(const Graph& g, std::size_t k);
// Smallest feedback vertex set contained in allow, if any.
std::optional<std::size_t> brute_fvs(const Graph& g, std::span<const Vertex> allow);
std::size_t brute_fvs(const Graph& g);
// Smallest feedback vertex set of size at most k inside allow, on graphs of
// any size.
std::optional<std::size_t> brute_fvs_upto(const Graph& g, std::size_t k, std::span<const Vertex> allow);
std::size_t brute_chromatic(const Graph& g);

// G - removed as a multigraph over the surviving vertices.
Multigraph to_multigraph(const Graph& g, std::span<const Vertex> removed = {});
// Applies "delete an unprotected vertex of degree <= 1" and "bypass an
// unprotected vertex of degree 2" until neither applies.
Multigraph naive_reduce(Multigraph g, std::span<const Vertex> protect);

}  // namespace dynfpt::oracle
