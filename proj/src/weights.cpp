#include "pdcut/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdcut {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

AuxWeight AuxWeight::star(Vertex center) {
  return AuxWeight(StarWeight{center});
}

AuxWeight AuxWeight::indexed_star(Vertex center, Vertex threshold) {
  return AuxWeight(IndexedStarWeight{center, threshold});
}

AuxWeight AuxWeight::indicator_cut_star(Vertex center, VertexSet reference,
                                        Vertex n) {
  std::sort(reference.begin(), reference.end());
  auto in_side = membership(reference, n);
  return AuxWeight(
      IndicatorCutStarWeight{center, std::move(reference), std::move(in_side)});
}

Vertex AuxWeight::center() const noexcept {
  return std::visit([](const auto& d) { return d.center; }, value_);
}

std::string AuxWeight::describe() const {
  return std::visit(
      overloaded{
          [](const StarWeight& d) {
            return "star(" + std::to_string(d.center) + ")";
          },
          [](const IndexedStarWeight& d) {
            return "indexed_star(" + std::to_string(d.center) + "," +
                   std::to_string(d.threshold) + ")";
          },
          [](const IndicatorCutStarWeight& d) {
            return "indicator_cut_star(" + std::to_string(d.center) + ",|S|=" +
                   std::to_string(d.reference.size()) + ")";
          }},
      value_);
}

Wide AuxWeight::value(Vertex a, Vertex b) const {
  return std::visit(
      overloaded{
          [&](const StarWeight& d) -> Wide {
            return (a == d.center || b == d.center) ? 1 : 0;
          },
          [&](const IndexedStarWeight& d) -> Wide {
            if (a == d.center) return b < d.threshold ? 1 : 0;
            if (b == d.center) return a < d.threshold ? 1 : 0;
            return 0;
          },
          [&](const IndicatorCutStarWeight& d) -> Wide {
            Vertex other;
            if (a == d.center) {
              other = b;
            } else if (b == d.center) {
              other = a;
            } else {
              return 0;
            }
            if (other >= d.in_side.size() || d.center >= d.in_side.size()) {
              throw std::out_of_range("edge outside reference cut domain");
            }
            return d.in_side[other] != d.in_side[d.center] ? 1 : 0;
          }},
      value_);
}

Wide AuxWeight::star_cut_value(std::span<const char> side, Vertex n) const {
  const Vertex c = center();
  if (c < 1 || c > n || side.size() < std::size_t(n) + 1) {
    throw std::out_of_range("star cut value: bad center or membership size");
  }
  const char c_in = side[c];
  return std::visit(
      overloaded{
          [&](const StarWeight&) -> Wide {
            Wide count = 0;
            for (Vertex v = 1; v <= n; ++v) count += side[v] != c_in;
            return count;
          },
          [&](const IndexedStarWeight& d) -> Wide {
            Wide count = 0;
            for (Vertex v = 1; v <= n && v < d.threshold; ++v) {
              count += side[v] != c_in;
            }
            return count;
          },
          [&](const IndicatorCutStarWeight& d) -> Wide {
            const char c_ref = d.in_side[c];
            Wide count = 0;
            for (Vertex v = 1; v <= n; ++v) {
              count += side[v] != c_in && d.in_side[v] != c_ref;
            }
            return count;
          }},
      value_);
}

LayeredValue::LayeredValue(std::size_t arity) : arity_(arity) {
  if (arity == 0 || arity > kMaxArity) {
    throw std::invalid_argument("layered value arity out of range");
  }
}

LayeredValue::LayeredValue(std::initializer_list<Wide> parts)
    : LayeredValue(parts.size()) {
  std::copy(parts.begin(), parts.end(), parts_.begin());
}

LayeredValue& LayeredValue::operator+=(const LayeredValue& other) {
  if (other.arity_ != arity_) {
    throw std::invalid_argument("layered value arity mismatch");
  }
  for (std::size_t i = 0; i < arity_; ++i) {
    parts_[i] = checked_add(parts_[i], other.parts_[i]);
  }
  return *this;
}

std::string LayeredValue::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < arity_; ++i) {
    if (i) out += ", ";
    out += pdcut::to_string(parts_[i]);
  }
  return out + ")";
}

bool operator==(const LayeredValue& a, const LayeredValue& b) {
  if (a.arity_ != b.arity_) return false;
  return std::equal(a.parts_.begin(), a.parts_.begin() + a.arity_,
                    b.parts_.begin());
}

std::strong_ordering compare_layered(const LayeredValue& a,
                                     const LayeredValue& b) {
  if (a.arity() != b.arity()) {
    throw std::invalid_argument("compare_layered: arity mismatch");
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

LayeredValue LayeredWeightFn::edge_value(const Edge& e) const {
  LayeredValue out(arity());
  out[0] = e.w;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    out[i + 1] = layers_[i].value(e.u, e.v);
  }
  return out;
}

Wide LayeredWeightFn::flatten(const LayeredValue& value) const {
  if (value.arity() != arity()) {
    throw std::invalid_argument("flatten: arity mismatch");
  }
  Wide flat = value[0];
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    flat = checked_add(checked_mul(flat, bounds_[i] + 1), value[i + 1]);
  }
  return flat;
}

LayeredValue LayeredWeightFn::unflatten(Wide flat) const {
  LayeredValue out(arity());
  for (std::size_t i = layers_.size(); i-- > 0;) {
    const Wide radix = bounds_[i] + 1;
    out[i + 1] = flat % radix;
    flat /= radix;
  }
  out[0] = flat;
  return out;
}

void LayeredWeightFn::validate_bounds(const WeightedGraph& g) const {
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    Wide sum = 0;
    for (const Edge& e : g.edges()) sum += layers_[i].value(e.u, e.v);
    if (sum > bounds_[i]) {
      throw std::invalid_argument(
          "layer " + std::to_string(i + 1) + " (" + layers_[i].describe() +
          ") sums to " + to_string(sum) + ", above its bound " +
          to_string(bounds_[i]));
    }
  }
}

Wide LayeredWeightFn::checked_total(const WeightedGraph& g) const {
  constexpr Wide kLimit = Wide{1} << 127;
  Wide total = 0;
  for (const Edge& e : g.edges()) {
    total = checked_add(total, flatten(edge_value(e)));
  }
  if (total >= kLimit) {
    throw std::overflow_error("flattened total weight exceeds 2^127");
  }
  return total;
}

LayeredWeightFn stitch(const LayeredWeightFn& wf, AuxWeight aux, Wide bound) {
  if (wf.layers_.size() >= LayeredWeightFn::kMaxLayers) {
    throw std::invalid_argument("stitch: at most " +
                                std::to_string(LayeredWeightFn::kMaxLayers) +
                                " auxiliary layers");
  }
  LayeredWeightFn out = wf;
  out.layers_.push_back(std::move(aux));
  out.bounds_.push_back(bound);
  return out;
}

std::vector<char> membership(std::span<const Vertex> side, Vertex n) {
  std::vector<char> in(std::size_t(n) + 1, 0);
  for (Vertex v : side) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
    if (in[v]) throw std::invalid_argument("duplicate vertex in side");
    in[v] = 1;
  }
  return in;
}

void require_proper_side(std::span<const Vertex> side, Vertex n) {
  if (side.empty() || side.size() >= n) {
    throw std::invalid_argument("cut side must be a proper nonempty subset");
  }
}

LayeredValue cut_weight(const WeightedGraph& g, const LayeredWeightFn& wf,
                        std::span<const Vertex> side) {
  const Vertex n = g.vertex_count();
  require_proper_side(side, n);
  const auto in = membership(side, n);
  LayeredValue total(wf.arity());
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) total += wf.edge_value(e);
  }
  return total;
}

}  // namespace pdcut
