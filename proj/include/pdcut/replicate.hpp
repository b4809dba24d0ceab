#ifndef PDCUT_REPLICATE_HPP
#define PDCUT_REPLICATE_HPP

#include <cstdint>
#include <vector>

#include "pdcut/engines.hpp"
#include "pdcut/graph.hpp"

namespace pdcut {

struct ReplicationOutcome {
  VertexSet side;
  unsigned count = 0;
};

struct ReplicationReport {
  unsigned runs = 0;
  unsigned failures = 0;                    // RandomnessFailure runs
  std::vector<ReplicationOutcome> outputs;  // by count desc, then side asc
  std::vector<std::uint64_t> engine_calls;  // per run, in seed order

  std::size_t distinct_outputs() const noexcept { return outputs.size(); }
  unsigned modal_count() const noexcept {
    return outputs.empty() ? 0 : outputs.front().count;
  }
  double agreement() const noexcept {
    return runs == 0 ? 0.0 : static_cast<double>(modal_count()) / runs;
  }
};

/// Runs pd_global_cut with seeds seed_base + 1 .. seed_base + runs.
/// Runs are spread over `threads` workers; each run owns its seed, call
/// counter and report slot, so the report does not depend on scheduling.
ReplicationReport replicate(const WeightedGraph& g, const EngineHandle& engine,
                            unsigned runs, std::uint64_t seed_base,
                            unsigned threads = 1);

}  // namespace pdcut

#endif  // PDCUT_REPLICATE_HPP
