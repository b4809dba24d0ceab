#ifndef PDCUT_CUT_HPP
#define PDCUT_CUT_HPP

#include <span>

#include "pdcut/types.hpp"
#include "pdcut/weights.hpp"

namespace pdcut {

/// A cut reported by the side that contains the designated source (vertex 1
/// for global cuts, s for s-t cuts), sorted ascending.
struct CutResult {
  VertexSet side;
  LayeredValue weight;

  friend bool operator==(const CutResult&, const CutResult&) = default;
};

/// Returns the side of (side, V\side) that contains `source`, sorted.
VertexSet normalize_side(std::span<const Vertex> side, Vertex n,
                         Vertex source);

VertexSet complement(std::span<const Vertex> side, Vertex n);

/// Builds a normalized CutResult and evaluates its layered weight on g.
CutResult make_cut(const WeightedGraph& g, const LayeredWeightFn& wf,
                   std::span<const Vertex> side, Vertex source = 1);

}  // namespace pdcut

#endif  // PDCUT_CUT_HPP
