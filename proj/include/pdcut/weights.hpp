#ifndef PDCUT_WEIGHTS_HPP
#define PDCUT_WEIGHTS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pdcut/graph.hpp"
#include "pdcut/types.hpp"

namespace pdcut {

/// 1 on every edge incident to `center`.
struct StarWeight {
  Vertex center;
  friend bool operator==(const StarWeight&, const StarWeight&) = default;
};

/// 1 on edges (center, v) with v < threshold.
struct IndexedStarWeight {
  Vertex center;
  Vertex threshold;
  friend bool operator==(const IndexedStarWeight&,
                         const IndexedStarWeight&) = default;
};

/// 1 on edges (center, v) that cross the reference cut.
struct IndicatorCutStarWeight {
  Vertex center;
  VertexSet reference;        // sorted side of the reference cut
  std::vector<char> in_side;  // membership of `reference`, indexed 1..n
  friend bool operator==(const IndicatorCutStarWeight& a,
                         const IndicatorCutStarWeight& b) {
    return a.center == b.center && a.reference == b.reference;
  }
};

/// Auxiliary weight that can be evaluated from edge endpoints alone. Every
/// kind sums to at most n over any simple graph, so n is always a valid
/// layer bound.
class AuxWeight {
 public:
  using Variant =
      std::variant<StarWeight, IndexedStarWeight, IndicatorCutStarWeight>;

  static AuxWeight star(Vertex center);
  static AuxWeight indexed_star(Vertex center, Vertex threshold);
  /// `reference` may be either side of the reference cut; n sizes the
  /// membership table.
  static AuxWeight indicator_cut_star(Vertex center, VertexSet reference,
                                      Vertex n);

  const Variant& variant() const noexcept { return value_; }
  Vertex center() const noexcept;
  std::string describe() const;

  /// Weight of edge (a, b).
  Wide value(Vertex a, Vertex b) const;

  /// Weight of the cut `side` | V\side over the full star at center(),
  /// computed from the vertex set only. Requires every star edge at
  /// center() to be present (as it is after build_star_extension).
  Wide star_cut_value(std::span<const char> side_membership, Vertex n) const;

  friend bool operator==(const AuxWeight&, const AuxWeight&) = default;

 private:
  explicit AuxWeight(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

/// Tuple (base, aux1, ..., auxk) of summed layer values.
class LayeredValue {
 public:
  static constexpr std::size_t kMaxArity = 4;

  LayeredValue() = default;
  explicit LayeredValue(std::size_t arity);
  LayeredValue(std::initializer_list<Wide> parts);

  std::size_t arity() const noexcept { return arity_; }
  Wide base() const noexcept { return parts_[0]; }
  Wide operator[](std::size_t i) const { return parts_.at(i); }
  Wide& operator[](std::size_t i) { return parts_.at(i); }

  LayeredValue& operator+=(const LayeredValue& other);

  std::string to_string() const;

  friend bool operator==(const LayeredValue& a, const LayeredValue& b);

 private:
  std::array<Wide, kMaxArity> parts_{};
  std::size_t arity_ = 1;
};

/// Lexicographic order; throws std::invalid_argument on arity mismatch.
std::strong_ordering compare_layered(const LayeredValue& a,
                                     const LayeredValue& b);

/// The graph's base weight stitched with up to three auxiliary layers.
///
/// Layer i is less significant than layer i-1. The flattened value of a
/// layered tuple is computed Horner-style:
///   flat = (((base)(B1+1) + aux1)(B2+1) + aux2)(B3+1) + aux3
class LayeredWeightFn {
 public:
  static constexpr std::size_t kMaxLayers = 3;

  LayeredWeightFn() = default;

  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::size_t arity() const noexcept { return layers_.size() + 1; }
  const std::vector<AuxWeight>& layers() const noexcept { return layers_; }
  const std::vector<Wide>& bounds() const noexcept { return bounds_; }

  LayeredValue edge_value(const Edge& e) const;

  Wide flatten(const LayeredValue& value) const;
  /// Inverse of flatten for values whose layer sums respect the bounds.
  LayeredValue unflatten(Wide flat) const;

  /// Throws std::invalid_argument if some layer's sum over g exceeds its
  /// declared bound.
  void validate_bounds(const WeightedGraph& g) const;

  /// Throws std::overflow_error unless the flattened total weight of g fits
  /// in 127 bits. Returns that total.
  Wide checked_total(const WeightedGraph& g) const;

  friend LayeredWeightFn stitch(const LayeredWeightFn& wf, AuxWeight aux,
                                Wide bound);

 private:
  std::vector<AuxWeight> layers_;
  std::vector<Wide> bounds_;
};

/// Appends `aux` as the new least-significant layer.
LayeredWeightFn stitch(const LayeredWeightFn& wf, AuxWeight aux, Wide bound);

/// Membership table indexed 1..n (slot 0 unused). Throws on out-of-range or
/// duplicate vertices.
std::vector<char> membership(std::span<const Vertex> side, Vertex n);

/// Throws std::invalid_argument unless side is a proper nonempty subset.
void require_proper_side(std::span<const Vertex> side, Vertex n);

/// Layered weight of the edges crossing (side, V\side).
LayeredValue cut_weight(const WeightedGraph& g, const LayeredWeightFn& wf,
                        std::span<const Vertex> side);

}  // namespace pdcut

#endif  // PDCUT_WEIGHTS_HPP
