#include "pdcut/cut.hpp"

#include <stdexcept>

namespace pdcut {

VertexSet complement(std::span<const Vertex> side, Vertex n) {
  const auto in = membership(side, n);
  VertexSet out;
  out.reserve(n - side.size());
  for (Vertex v = 1; v <= n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

VertexSet normalize_side(std::span<const Vertex> side, Vertex n,
                         Vertex source) {
  require_proper_side(side, n);
  const auto in = membership(side, n);
  if (source < 1 || source > n) {
    throw std::invalid_argument("source out of range");
  }
  VertexSet out;
  for (Vertex v = 1; v <= n; ++v) {
    if (in[v] == in[source]) out.push_back(v);
  }
  return out;
}

CutResult make_cut(const WeightedGraph& g, const LayeredWeightFn& wf,
                   std::span<const Vertex> side, Vertex source) {
  CutResult r;
  r.side = normalize_side(side, g.vertex_count(), source);
  r.weight = cut_weight(g, wf, r.side);
  return r;
}

}  // namespace pdcut
