#include "pdcut/cut_query.hpp"

#include "flat_graph.hpp"
#include "pdcut/pseudodet.hpp"

namespace pdcut {

Wide CutOracle::answer(std::span<const Vertex> side) const {
  require_proper_side(side, n_);
  const auto in = membership(side, n_);
  queries_.fetch_add(1, std::memory_order_relaxed);
  return evaluate(side, in);
}

namespace {

class GraphOracle final : public CutOracle {
 public:
  GraphOracle(WeightedGraph g, LayeredWeightFn wf)
      : CutOracle(g.vertex_count()), g_(std::move(g)), wf_(std::move(wf)) {
    wf_.validate_bounds(g_);
    wf_.checked_total(g_);
  }

 protected:
  Wide evaluate(std::span<const Vertex> side,
                std::span<const char>) const override {
    return wf_.flatten(cut_weight(g_, wf_, side));
  }

 private:
  WeightedGraph g_;
  LayeredWeightFn wf_;
};

class StitchedOracle final : public CutOracle {
 public:
  StitchedOracle(OracleHandle base, AuxWeight aux, Vertex n)
      : CutOracle(n), base_(std::move(base)), aux_(std::move(aux)) {
    if (!base_ || base_->vertex_count() != n) {
      throw std::invalid_argument("stitched_oracle: vertex count mismatch");
    }
  }

 protected:
  Wide evaluate(std::span<const Vertex> side,
                std::span<const char> in_side) const override {
    const Vertex n = vertex_count();
    const Wide base = base_->answer(side);
    return checked_add(checked_mul(base, Wide(n) + 1),
                       aux_.star_cut_value(in_side, n));
  }

 private:
  OracleHandle base_;
  AuxWeight aux_;
};

class ReconstructEngine final : public MinCutEngine {
 public:
  ReconstructEngine(OracleHandle oracle, Vertex n)
      : oracle_(std::move(oracle)), n_(n) {
    if (!oracle_ || oracle_->vertex_count() != n || n < 2) {
      throw std::invalid_argument("reconstruct_engine: bad oracle");
    }
  }

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t) const override {
    if (g.vertex_count() != n_) {
      throw std::invalid_argument("reconstruct_engine: vertex count mismatch");
    }
    const detail::FlatGraph flat = reconstruct();
    const detail::FlatCut cut = detail::stoer_wagner_core(flat);
    CutResult r;
    r.side = normalize_side(detail::to_vertex_set(cut.side), n_, 1);
    r.weight = wf.unflatten(cut.value);
    return r;
  }
  double rho() const noexcept override { return 1.0; }
  EngineKind kind() const noexcept override { return EngineKind::external; }

 private:
  detail::FlatGraph reconstruct() const {
    detail::FlatGraph flat;
    flat.n = n_;
    std::vector<Wide> degree(n_ + 1);
    for (Vertex u = 1; u <= n_; ++u) {
      const Vertex single[] = {u};
      degree[u] = oracle_->answer(single);
    }
    if (n_ == 2) {
      if (degree[1] != degree[2]) {
        throw ProtocolError("asymmetric answers on a two-vertex graph");
      }
      flat.add(0, 1, degree[1]);
      return flat;
    }
    for (Vertex u = 1; u <= n_; ++u) {
      for (Vertex v = u + 1; v <= n_; ++v) {
        const Vertex pair[] = {u, v};
        const Wide joint = oracle_->answer(pair);
        const Wide sum = checked_add(degree[u], degree[v]);
        if (joint > sum || (sum - joint) % 2 != 0) {
          throw ProtocolError("inconsistent answers for pair (" +
                              std::to_string(u) + "," + std::to_string(v) +
                              ")");
        }
        flat.add(u - 1, v - 1, (sum - joint) / 2);
      }
    }
    return flat;
  }

  OracleHandle oracle_;
  Vertex n_;
};

// Engine for pd_global_via_queries: each call stitches the base oracle with
// the call's layers and reconstructs from the stitched answers only.
class QueryEngine final : public MinCutEngine {
 public:
  QueryEngine(OracleHandle base, Vertex n) : base_(std::move(base)), n_(n) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t seed) const override {
    OracleHandle oracle = base_;
    for (std::size_t i = 0; i < wf.layer_count(); ++i) {
      if (wf.bounds()[i] != n_) {
        throw std::invalid_argument("query engine expects layer bounds = n");
      }
      oracle = stitched_oracle(oracle, wf.layers()[i], n_);
    }
    return ReconstructEngine(oracle, n_).solve(g, wf, seed);
  }
  double rho() const noexcept override { return 1.0; }
  EngineKind kind() const noexcept override { return EngineKind::external; }

 private:
  OracleHandle base_;
  Vertex n_;
};

}  // namespace

OracleHandle oracle_from_graph(const WeightedGraph& g,
                               const LayeredWeightFn& wf) {
  return std::make_shared<GraphOracle>(g, wf);
}

OracleHandle stitched_oracle(OracleHandle base, AuxWeight aux, Vertex n) {
  return std::make_shared<StitchedOracle>(std::move(base), std::move(aux), n);
}

std::uint64_t reconstruction_query_cost(Vertex n) noexcept {
  const std::uint64_t nn = n;
  return n == 2 ? 2 : nn * (nn - 1) / 2 + nn;
}

EngineHandle reconstruct_engine(OracleHandle oracle, Vertex n) {
  return std::make_shared<ReconstructEngine>(std::move(oracle), n);
}

QueryRunResult pd_global_via_queries(OracleHandle oracle, Vertex n,
                                     std::uint64_t seed) {
  if (!oracle || oracle->vertex_count() != n) {
    throw std::invalid_argument("pd_global_via_queries: vertex count mismatch");
  }
  // The algorithm's own view of the graph: no edges beyond those it adds
  // itself (zero-weight stars). Every weight comes from the oracle.
  const WeightedGraph local = WeightedGraph::empty(n);
  auto counter = std::make_shared<CallCounter>();
  EngineHandle engine =
      count_calls(std::make_shared<QueryEngine>(oracle, n), counter);
  const std::uint64_t before = oracle->query_count();
  QueryRunResult out;
  out.cut = pd_global_cut(local, engine, seed);
  out.queries = oracle->query_count() - before;
  out.engine_calls = counter->value();
  return out;
}

}  // namespace pdcut
