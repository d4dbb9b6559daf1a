#include <algorithm>
#include <deque>
#include <limits>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

std::int64_t max_flow(const FlowNet& net) {
  if (net.source == net.sink) throw Error(Errc::InvalidOp, "flow source equals sink");
  struct Edge {
    int to;
    std::int64_t residual;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out(net.node_count);
  for (const auto& arc : net.arcs) {
    if (arc.capacity < 0) throw Error(Errc::InvalidOp, "negative arc capacity");
    out[arc.from].push_back(static_cast<int>(edges.size()));
    edges.push_back({arc.to, arc.capacity});
    out[arc.to].push_back(static_cast<int>(edges.size()));
    edges.push_back({arc.from, 0});
  }

  std::int64_t total = 0;
  std::vector<int> via(net.node_count);
  for (;;) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{net.source};
    via[net.source] = -2;
    while (!queue.empty() && via[net.sink] == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int e : out[u]) {
        if (edges[e].residual > 0 && via[edges[e].to] == -1) {
          via[edges[e].to] = e;
          queue.push_back(edges[e].to);
        }
      }
    }
    if (via[net.sink] == -1) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = net.sink; v != net.source; v = edges[via[v] ^ 1].to) push = std::min(push, edges[via[v]].residual);
    for (int v = net.sink; v != net.source; v = edges[via[v] ^ 1].to) {
      edges[via[v]].residual -= push;
      edges[via[v] ^ 1].residual += push;
    }
    total += push;
  }
  return total;
}

}  // namespace dynfpt
