#include <algorithm>
#include <numeric>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

namespace {

bool colorable(const Graph& g, const std::vector<Vertex>& order, std::vector<int>& color, std::size_t i,
               int used, int k) {
  if (i == order.size()) return true;
  const Vertex v = order[i];
  // Colors beyond used+1 are symmetric to used+1.
  for (int c = 0; c < std::min(used + 1, k); ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v)) {
      if (color[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, order, color, i + 1, std::max(used, c + 1), k)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int chromatic_exact(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (n == 0) return 0;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (int k = 1;; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(g, order, color, 0, 0, k)) return k;
  }
}

}  // namespace dynfpt
