#include "pdcut/engines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flat_graph.hpp"

namespace pdcut {

std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::karger_stein: return "karger_stein";
    case EngineKind::stoer_wagner: return "stoer_wagner";
    case EngineKind::brute_force: return "brute_force";
    case EngineKind::st_flow: return "st_flow";
    case EngineKind::external: return "external";
  }
  return "unknown";
}

std::uint64_t split_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  std::uint64_t z = parent + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// ----------------------------------------------------------------- brute force

MinCutSets brute_force_min_cut_family(const WeightedGraph& g,
                                      const LayeredWeightFn& wf,
                                      std::optional<Terminals> constraint) {
  const Vertex n = g.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute force limited to n <= " +
                                std::to_string(kBruteForceMaxVertices));
  }
  Vertex source = 1;
  Vertex sink = 0;  // none
  if (constraint) {
    auto [s, t] = *constraint;
    if (s == t || s < 1 || t < 1 || s > n || t > n) {
      throw std::invalid_argument("brute force: invalid terminals");
    }
    source = s;
    sink = t;
  }
  const detail::FlatGraph flat = detail::flatten_graph(g, wf);

  std::vector<std::vector<std::pair<Vertex, Wide>>> adj(n + 1);
  for (const auto& e : flat.edges) {
    adj[e.u + 1].emplace_back(e.v + 1, e.w);
    adj[e.v + 1].emplace_back(e.u + 1, e.w);
  }
  std::vector<Vertex> free;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != source && v != sink) free.push_back(v);
  }

  // Gray-code walk over the free vertices; in[] tracks the current side and
  // `value` its flattened cut weight.
  std::vector<char> in(n + 1, 0);
  in[source] = 1;
  std::size_t side_size = 1;
  Wide value = 0;
  for (auto [x, w] : adj[source]) value += w;

  Wide best = 0;
  bool have_best = false;
  std::vector<std::uint32_t> best_masks;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  std::uint32_t mask = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i > 0) {
      const int bit = __builtin_ctzll(i);
      const Vertex v = free[bit];
      for (auto [x, w] : adj[v]) {
        if (in[x] == in[v]) {
          value += w;
        } else {
          value -= w;
        }
      }
      in[v] = !in[v];
      side_size += in[v] ? 1 : -1;
      mask ^= 1u << bit;
    }
    if (side_size == n) continue;
    if (!have_best || value < best) {
      best = value;
      best_masks.clear();
      have_best = true;
    }
    if (value == best) best_masks.push_back(mask);
  }

  MinCutSets out;
  out.sides.reserve(best_masks.size());
  for (std::uint32_t m : best_masks) {
    VertexSet side{source};
    for (std::size_t b = 0; b < free.size(); ++b) {
      if ((m >> b) & 1u) side.push_back(free[b]);
    }
    std::sort(side.begin(), side.end());
    out.sides.push_back(std::move(side));
  }
  std::sort(out.sides.begin(), out.sides.end());
  out.value = cut_weight(g, wf, out.sides.front());
  return out;
}

// ------------------------------------------------------------- exact / random

CutResult stoer_wagner(const WeightedGraph& g, const LayeredWeightFn& wf) {
  const auto flat = detail::flatten_graph(g, wf);
  const auto cut = detail::stoer_wagner_core(flat);
  return make_cut(g, wf, detail::to_vertex_set(cut.side));
}

unsigned karger_stein_repetitions(Vertex n, double c) {
  const double ln = std::log(static_cast<double>(std::max<Vertex>(n, 2)));
  return std::max(1u, static_cast<unsigned>(std::ceil(c * ln * ln)));
}

CutResult karger_stein(const WeightedGraph& g, const LayeredWeightFn& wf,
                       std::uint64_t seed, double repetition_constant) {
  const auto flat = detail::flatten_graph(g, wf);
  const auto cut = detail::karger_stein_core(
      flat, split_seed(seed, 0),
      karger_stein_repetitions(g.vertex_count(), repetition_constant));
  return make_cut(g, wf, detail::to_vertex_set(cut.side));
}

CutResult st_flow_min_cut(const WeightedGraph& g, const LayeredWeightFn& wf,
                          Vertex s, Vertex t) {
  const Vertex n = g.vertex_count();
  if (s == t) throw std::invalid_argument("st_flow_min_cut: s == t");
  if (s < 1 || t < 1 || s > n || t > n) {
    throw std::invalid_argument("st_flow_min_cut: terminal out of range");
  }
  const auto flat = detail::flatten_graph(g, wf);
  const auto cut = detail::st_flow_core(flat, s - 1, t - 1);
  return make_cut(g, wf, detail::to_vertex_set(cut.side), s);
}

// --------------------------------------------------------------------- handles

namespace {

class BruteForceEngine final : public MinCutEngine {
 public:
  explicit BruteForceEngine(std::optional<Terminals> constraint)
      : constraint_(constraint) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t) const override {
    MinCutSets family = brute_force_min_cut_family(g, wf, constraint_);
    return CutResult{std::move(family.sides.front()), family.value};
  }
  double rho() const noexcept override { return 1.0; }
  EngineKind kind() const noexcept override { return EngineKind::brute_force; }
  std::optional<Terminals> terminals() const noexcept override {
    return constraint_;
  }

 private:
  std::optional<Terminals> constraint_;
};

class StoerWagnerEngine final : public MinCutEngine {
 public:
  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t) const override {
    return stoer_wagner(g, wf);
  }
  double rho() const noexcept override { return 1.0; }
  EngineKind kind() const noexcept override { return EngineKind::stoer_wagner; }
};

class KargerSteinEngine final : public MinCutEngine {
 public:
  explicit KargerSteinEngine(double c) : c_(c) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t seed) const override {
    return karger_stein(g, wf, seed, c_);
  }
  double rho() const noexcept override { return 2.0 / 3.0; }
  EngineKind kind() const noexcept override { return EngineKind::karger_stein; }

 private:
  double c_;
};

class StFlowEngine final : public MinCutEngine {
 public:
  StFlowEngine(Vertex s, Vertex t) : st_(s, t) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t) const override {
    return st_flow_min_cut(g, wf, st_.first, st_.second);
  }
  double rho() const noexcept override { return 1.0; }
  EngineKind kind() const noexcept override { return EngineKind::st_flow; }
  std::optional<Terminals> terminals() const noexcept override { return st_; }

 private:
  Terminals st_;
};

class AmplifiedEngine final : public MinCutEngine {
 public:
  AmplifiedEngine(EngineHandle inner, unsigned trials)
      : inner_(std::move(inner)), trials_(trials) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t seed) const override {
    CutResult best = inner_->solve(g, wf, seed);
    for (unsigned i = 1; i < trials_; ++i) {
      CutResult r = inner_->solve(g, wf, split_seed(seed, i));
      if (compare_layered(r.weight, best.weight) < 0) best = std::move(r);
    }
    return best;
  }
  double rho() const noexcept override {
    return amplified_rho(inner_->rho(), trials_);
  }
  EngineKind kind() const noexcept override { return inner_->kind(); }
  std::optional<Terminals> terminals() const noexcept override {
    return inner_->terminals();
  }

 private:
  EngineHandle inner_;
  unsigned trials_;
};

class CountingEngine final : public MinCutEngine {
 public:
  CountingEngine(EngineHandle inner, std::shared_ptr<CallCounter> counter)
      : inner_(std::move(inner)), counter_(std::move(counter)) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t seed) const override {
    counter_->increment();
    return inner_->solve(g, wf, seed);
  }
  double rho() const noexcept override { return inner_->rho(); }
  EngineKind kind() const noexcept override { return inner_->kind(); }
  std::optional<Terminals> terminals() const noexcept override {
    return inner_->terminals();
  }

 private:
  EngineHandle inner_;
  std::shared_ptr<CallCounter> counter_;
};

}  // namespace

EngineHandle make_brute_force_engine(std::optional<Terminals> constraint) {
  return std::make_shared<BruteForceEngine>(constraint);
}

EngineHandle make_stoer_wagner_engine() {
  return std::make_shared<StoerWagnerEngine>();
}

EngineHandle make_karger_stein_engine(double repetition_constant) {
  return std::make_shared<KargerSteinEngine>(repetition_constant);
}

EngineHandle make_st_flow_engine(Vertex s, Vertex t) {
  if (s == t) throw std::invalid_argument("st_flow engine: s == t");
  return std::make_shared<StFlowEngine>(s, t);
}

EngineHandle amplify(EngineHandle inner, unsigned trials) {
  if (trials == 0) throw std::invalid_argument("amplify: trials must be >= 1");
  if (trials == 1) return inner;
  return std::make_shared<AmplifiedEngine>(std::move(inner), trials);
}

double amplified_rho(double rho, unsigned trials) {
  return 1.0 - std::pow(1.0 - rho, static_cast<double>(trials));
}

EngineHandle count_calls(EngineHandle inner,
                         std::shared_ptr<CallCounter> counter) {
  return std::make_shared<CountingEngine>(std::move(inner), std::move(counter));
}

}  // namespace pdcut
