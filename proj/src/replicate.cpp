#include "pdcut/replicate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>

#include "pdcut/pseudodet.hpp"

namespace pdcut {

ReplicationReport replicate(const WeightedGraph& g, const EngineHandle& engine,
                            unsigned runs, std::uint64_t seed_base,
                            unsigned threads) {
  if (runs == 0) throw std::invalid_argument("replicate: runs must be >= 1");
  struct Slot {
    std::optional<VertexSet> side;
    std::uint64_t calls = 0;
  };
  std::vector<Slot> slots(runs);
  std::atomic<unsigned> next{0};

  auto worker = [&] {
    for (unsigned i = next++; i < runs; i = next++) {
      auto counter = std::make_shared<CallCounter>();
      EngineHandle counted = count_calls(engine, counter);
      try {
        slots[i].side = pd_global_cut(g, counted, seed_base + i + 1).side;
      } catch (const RandomnessFailure&) {
        slots[i].side.reset();
      }
      slots[i].calls = counter->value();
    }
  };

  threads = std::clamp(threads, 1u, runs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ReplicationReport report;
  report.runs = runs;
  std::map<VertexSet, unsigned> tally;
  for (const Slot& s : slots) {
    report.engine_calls.push_back(s.calls);
    if (s.side) {
      ++tally[*s.side];
    } else {
      ++report.failures;
    }
  }
  for (auto& [side, count] : tally) report.outputs.push_back({side, count});
  std::stable_sort(report.outputs.begin(), report.outputs.end(),
                   [](const ReplicationOutcome& a, const ReplicationOutcome& b) {
                     return a.count > b.count;
                   });
  return report;
}

}  // namespace pdcut
