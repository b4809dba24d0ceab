#ifndef PDCUT_GRAPH_HPP
#define PDCUT_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdcut/types.hpp"

namespace pdcut {

struct Edge {
  Vertex u;  // u < v after normalization
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class ParseErrorKind {
  malformed_line,
  missing_header,
  duplicate_header,
  duplicate_edge,
  self_loop,
  nonpositive_weight,
  vertex_out_of_range,
  count_mismatch,
  too_few_vertices,
};

std::string_view to_string(ParseErrorKind kind);

/// Raised for every invalid graph input, from files or from code.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Simple undirected graph on vertices 1..n with integer edge weights.
///
/// Immutable after construction. Edges are stored with u < v in the order
/// they were supplied; the pair index gives O(1) lookup by endpoints.
class WeightedGraph {
 public:
  /// Validates and builds a graph. Weights must be >= 1 unless
  /// `allow_zero_weights` is set (extended graphs and materialized streams).
  static WeightedGraph create(Vertex n, std::vector<Edge> edges,
                              bool allow_zero_weights = false);

  /// n isolated vertices.
  static WeightedGraph empty(Vertex n);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  Weight max_weight() const noexcept { return max_weight_; }

  /// Edge sets compared as unordered sets of (u, v, w).
  bool same_edges(const WeightedGraph& other) const;

 private:
  WeightedGraph() = default;
  static std::uint64_t key(Vertex a, Vertex b) noexcept;

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  Weight max_weight_ = 0;
};

/// Parses the "p mincut <n> <m>" / "e <u> <v> <w>" text format.
WeightedGraph parse_graph(std::string_view text);

WeightedGraph load_graph_file(const std::string& path);

std::string format_graph(const WeightedGraph& g);

/// G plus every missing star edge (center, v) at base weight 0.
WeightedGraph build_star_extension(const WeightedGraph& g, Vertex center);

}  // namespace pdcut

#endif  // PDCUT_GRAPH_HPP
