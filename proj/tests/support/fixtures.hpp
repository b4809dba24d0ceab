#ifndef PDCUT_TESTS_FIXTURES_HPP
#define PDCUT_TESTS_FIXTURES_HPP

#include <string>

#include "pdcut/graph.hpp"
#include "pdcut/weights.hpp"

namespace pdcut::testing {

inline WeightedGraph triangle() {
  return WeightedGraph::create(3, {{1, 2, 1}, {1, 3, 2}, {2, 3, 3}});
}
inline WeightedGraph c4() {
  return WeightedGraph::create(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 4, 1}});
}
inline WeightedGraph p3() { return WeightedGraph::create(3, {{1, 2, 1}, {2, 3, 1}}); }
inline WeightedGraph star_path() {
  return WeightedGraph::create(3, {{1, 2, 1}, {1, 3, 1}});
}
inline WeightedGraph single_edge() { return WeightedGraph::create(2, {{1, 2, 5}}); }
inline WeightedGraph two_edges() {
  return WeightedGraph::create(4, {{1, 2, 1}, {3, 4, 1}});
}

inline LayeredWeightFn with(std::initializer_list<AuxWeight> layers, Vertex n) {
  LayeredWeightFn wf;
  for (const AuxWeight& a : layers) wf = stitch(wf, a, n);
  return wf;
}

inline LayeredValue lv(std::initializer_list<Wide> parts) { return LayeredValue(parts); }

}  // namespace pdcut::testing

#endif  // PDCUT_TESTS_FIXTURES_HPP
