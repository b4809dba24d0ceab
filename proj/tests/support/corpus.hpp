#ifndef PDCUT_TESTS_CORPUS_HPP
#define PDCUT_TESTS_CORPUS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pdcut/graph.hpp"

namespace pdcut::testing {

using Shape = std::vector<std::pair<Vertex, Vertex>>;

/// One representative of every isomorphism class of connected simple graphs
/// with exactly n vertices (n <= 8). Counts follow OEIS A001349.
const std::vector<Shape>& connected_shapes(Vertex n);

/// Every connected shape with 2 <= n <= max_n, each with `draws` independent
/// weight assignments uniform in {1..max_weight}.
std::vector<WeightedGraph> exhaustive_corpus(Vertex max_n, unsigned draws,
                                             Weight max_weight,
                                             std::uint64_t seed);

/// Random simple graph on n vertices with (about) m edges and weights in
/// {1..max_weight}. When `connected`, a random spanning tree comes first.
WeightedGraph random_graph(std::mt19937_64& rng, Vertex n, std::size_t m,
                           Weight max_weight, bool connected);

/// n uniform in [min_n, max_n], m uniform in [n - 1, min(max_m, n(n-1)/2)],
/// connected with probability 0.9.
WeightedGraph random_graph_in(std::mt19937_64& rng, Vertex min_n, Vertex max_n,
                              std::size_t max_m, Weight max_weight);

}  // namespace pdcut::testing

#endif  // PDCUT_TESTS_CORPUS_HPP
