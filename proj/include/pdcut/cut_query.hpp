#ifndef PDCUT_CUT_QUERY_HPP
#define PDCUT_CUT_QUERY_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>

#include "pdcut/cut.hpp"
#include "pdcut/engines.hpp"
#include "pdcut/weights.hpp"

namespace pdcut {

/// Cut-query access to a graph: answer(S) is the total (flattened) weight
/// crossing (S, V\S). Every answered query bumps query_count().
class CutOracle {
 public:
  explicit CutOracle(Vertex n) : n_(n) {}
  virtual ~CutOracle() = default;

  CutOracle(const CutOracle&) = delete;
  CutOracle& operator=(const CutOracle&) = delete;

  /// Throws std::invalid_argument unless side is a proper nonempty subset.
  Wide answer(std::span<const Vertex> side) const;

  Vertex vertex_count() const noexcept { return n_; }
  std::uint64_t query_count() const noexcept {
    return queries_.load(std::memory_order_relaxed);
  }

 protected:
  virtual Wide evaluate(std::span<const Vertex> side,
                        std::span<const char> in_side) const = 0;

 private:
  Vertex n_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

using OracleHandle = std::shared_ptr<const CutOracle>;

/// Raised when oracle answers cannot come from a nonnegative integer graph.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// answer(S) = flatten(cut_weight(g, wf, S)).
OracleHandle oracle_from_graph(const WeightedGraph& g,
                               const LayeredWeightFn& wf = {});

/// answer'(S) = base.answer(S) * (n + 1) + aux cut value, the latter computed
/// from S alone (the full star at aux.center() is implied). One base query
/// per answered query.
OracleHandle stitched_oracle(OracleHandle base, AuxWeight aux, Vertex n);

/// Queries issued by one reconstruct_engine invocation: n singletons plus
/// n(n-1)/2 pairs (just the singletons when n = 2).
std::uint64_t reconstruction_query_cost(Vertex n) noexcept;

/// Exact engine that recovers every pair weight of the oracle's graph by
/// w(u,v) = (answer({u}) + answer({v}) - answer({u,v})) / 2 and runs
/// Stoer-Wagner on the result. The (g, wf) passed to solve() are used only
/// for n and for splitting the flattened cut value into layers.
EngineHandle reconstruct_engine(OracleHandle oracle, Vertex n);

struct QueryRunResult {
  CutResult cut;
  std::uint64_t queries = 0;       // base-oracle queries
  std::uint64_t engine_calls = 0;
};

/// pd_global_cut in which each engine invocation reads the graph only through
/// `oracle` wrapped by stitched_oracle for the invocation's layers.
QueryRunResult pd_global_via_queries(OracleHandle oracle, Vertex n,
                                     std::uint64_t seed = 0);

}  // namespace pdcut

#endif  // PDCUT_CUT_QUERY_HPP
