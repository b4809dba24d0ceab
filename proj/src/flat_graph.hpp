#ifndef PDCUT_SRC_FLAT_GRAPH_HPP
#define PDCUT_SRC_FLAT_GRAPH_HPP

// Internal: graphs with a single flattened weight per edge, and the exact /
// randomized cores that run on them. Vertices are 0-based here.

#include <cstdint>
#include <vector>

#include "pdcut/graph.hpp"
#include "pdcut/types.hpp"
#include "pdcut/weights.hpp"

namespace pdcut::detail {

struct FlatEdge {
  std::uint32_t u;
  std::uint32_t v;
  Wide w;
};

struct FlatGraph {
  std::uint32_t n = 0;
  std::vector<FlatEdge> edges;  // zero-weight edges dropped
  Wide total = 0;

  void add(std::uint32_t u, std::uint32_t v, Wide w);
};

/// Validates layer bounds and the 127-bit magnitude budget, then flattens.
FlatGraph flatten_graph(const WeightedGraph& g, const LayeredWeightFn& wf);

/// Side membership over 0..n-1 plus the flattened cut value.
struct FlatCut {
  std::vector<char> side;
  Wide value = 0;
};

Wide flat_cut_value(const FlatGraph& g, const std::vector<char>& side);

FlatCut stoer_wagner_core(const FlatGraph& g);
FlatCut karger_stein_core(const FlatGraph& g, std::uint64_t seed,
                          unsigned repetitions);
FlatCut st_flow_core(const FlatGraph& g, std::uint32_t s, std::uint32_t t);

/// 1-based sorted side from 0-based membership.
VertexSet to_vertex_set(const std::vector<char>& side);

}  // namespace pdcut::detail

#endif  // PDCUT_SRC_FLAT_GRAPH_HPP
