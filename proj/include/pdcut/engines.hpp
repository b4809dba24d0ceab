#ifndef PDCUT_ENGINES_HPP
#define PDCUT_ENGINES_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pdcut/cut.hpp"
#include "pdcut/graph.hpp"
#include "pdcut/weights.hpp"

namespace pdcut {

enum class EngineKind { karger_stein, stoer_wagner, brute_force, st_flow, external };

std::string_view to_string(EngineKind kind);

using Terminals = std::pair<Vertex, Vertex>;

/// Contract shared by every minimum-cut procedure the pseudodeterministic
/// layer may call.
///
/// solve() must always return a proper cut of `g` whose weight field equals
/// cut_weight(g, wf, side), and must be a pure function of (g, wf, seed).
/// With probability at least rho() the cut is minimum under the layered
/// order of `wf`. The reported side contains source().
class MinCutEngine {
 public:
  virtual ~MinCutEngine() = default;

  virtual CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                          std::uint64_t seed) const = 0;
  virtual double rho() const noexcept = 0;
  virtual EngineKind kind() const noexcept = 0;
  /// Set for s-t engines.
  virtual std::optional<Terminals> terminals() const noexcept {
    return std::nullopt;
  }
  Vertex source() const noexcept {
    auto st = terminals();
    return st ? st->first : 1;
  }
};

using EngineHandle = std::shared_ptr<const MinCutEngine>;

/// Counts engine invocations; safe to bump from concurrent trials.
class CallCounter {
 public:
  void increment() noexcept { count_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t value() const noexcept {
    return count_.load(std::memory_order_relaxed);
  }

 private:
  std::atomic<std::uint64_t> count_{0};
};

/// Child seed for trial `index`: splitmix64(parent + (index + 1) * golden).
/// Reproducible bit-for-bit on every platform.
std::uint64_t split_seed(std::uint64_t parent, std::uint64_t index) noexcept;

/// All minimizing sides together with their common layered value.
struct MinCutSets {
  LayeredValue value;
  std::vector<VertexSet> sides;  // sorted lexicographically
};

inline constexpr Vertex kBruteForceMaxVertices = 20;

/// Enumerates every cut. Sides contain vertex 1, or contain s and exclude t
/// when `constraint` is set. Throws std::invalid_argument for n > 20.
MinCutSets brute_force_min_cut_family(
    const WeightedGraph& g, const LayeredWeightFn& wf,
    std::optional<Terminals> constraint = std::nullopt);

/// Deterministic exact global minimum cut under the layered order.
CutResult stoer_wagner(const WeightedGraph& g, const LayeredWeightFn& wf);

/// Number of full recursive contraction runs per call: ceil(c ln^2 n), >= 1.
unsigned karger_stein_repetitions(Vertex n, double c = 3.0);

/// Randomized recursive contraction; edges are sampled in proportion to
/// their flattened weight.
CutResult karger_stein(const WeightedGraph& g, const LayeredWeightFn& wf,
                       std::uint64_t seed, double repetition_constant = 3.0);

/// Exact minimum s-t cut by shortest augmenting paths on flattened
/// capacities. The side is the set reachable from s in the final residual
/// graph.
CutResult st_flow_min_cut(const WeightedGraph& g, const LayeredWeightFn& wf,
                          Vertex s, Vertex t);

EngineHandle make_brute_force_engine(
    std::optional<Terminals> constraint = std::nullopt);
EngineHandle make_stoer_wagner_engine();
/// Declared rho is 2/3.
EngineHandle make_karger_stein_engine(double repetition_constant = 3.0);
EngineHandle make_st_flow_engine(Vertex s, Vertex t);

/// Runs `inner` on `trials` seeds and keeps the layered minimum. Trial 0
/// reuses the caller's seed, trial i > 0 uses split_seed(seed, i).
EngineHandle amplify(EngineHandle inner, unsigned trials);

/// Declared success probability of amplify(engine with rho, trials).
double amplified_rho(double rho, unsigned trials);

EngineHandle count_calls(EngineHandle inner,
                         std::shared_ptr<CallCounter> counter);

}  // namespace pdcut

#endif  // PDCUT_ENGINES_HPP
