#include "dynfpt/dyn_vc.hpp"

#include <algorithm>

#include "dynfpt/solvers.hpp"

namespace dynfpt {

DynVc::DynVc(std::size_t n) : g_(n) {}

Kernel DynVc::kernel() const {
  Kernel k;
  std::vector<Vertex> reduced;
  for (Vertex x : x_) {
    if (g_.degree(x) > x_.size()) {
      k.forced.push_back(x);
    } else {
      reduced.push_back(x);
      reduced.insert(reduced.end(), g_.neighbors(x).begin(), g_.neighbors(x).end());
    }
  }
  reduced = sorted_unique(std::move(reduced));
  std::erase_if(reduced, [&](Vertex v) { return std::binary_search(k.forced.begin(), k.forced.end(), v); });
  k.reduced = g_.induced(reduced);
  return k;
}

void DynVc::recompute() {
  Kernel k = kernel();
  const VertexSet y = k.reduced.to_original(vc_2approx(k.reduced.graph));
  x_.clear();
  x_.insert(k.forced.begin(), k.forced.end());
  x_.insert(y.begin(), y.end());
}

void DynVc::update(const EdgeOp& op) {
  g_.apply(op);
  if (op.is_insert() && !x_.contains(op.u) && !x_.contains(op.v)) x_.insert(std::min(op.u, op.v));
  recompute();
}

VertexSet DynVc::query() const {
  Kernel k = kernel();
  const auto y = vc_exact(k.reduced.graph);
  VertexSet out = k.forced;
  const VertexSet mapped = k.reduced.to_original(*y);
  out.insert(out.end(), mapped.begin(), mapped.end());
  return sorted_unique(std::move(out));
}

}  // namespace dynfpt
