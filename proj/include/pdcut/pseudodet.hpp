#ifndef PDCUT_PSEUDODET_HPP
#define PDCUT_PSEUDODET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pdcut/cut.hpp"
#include "pdcut/engines.hpp"
#include "pdcut/graph.hpp"

namespace pdcut {

/// Vertex every global cut is normalized around.
inline constexpr Vertex kCanonicalSource = 1;

/// Unique(cut) when `cut` is set, NotUnique otherwise.
struct UniquenessVerdict {
  std::optional<CutResult> cut;

  bool unique() const noexcept { return cut.has_value(); }
};

/// Binary-search window over probe thresholds; probe() = floor((l + u) / 2).
struct SearchState {
  Vertex lower;
  Vertex upper;

  bool open() const noexcept { return lower <= upper; }
  Vertex probe() const noexcept { return (lower + upper) / 2; }
};

/// Minimum cuts of the star extension at vertex 1 under [w, w_s].
struct MinCutFamily {
  std::vector<CutResult> cuts;  // sides contain vertex 1
  VertexSet union_t;            // union of all T sides, sorted
  Vertex t_max = 0;             // largest vertex of union_t

  /// Index of the member whose T side contains t_max.
  std::size_t canonical_index() const;
};

/// Thrown by pd_global_cut when the search window closes without an
/// isolated cut; only possible if some randomized subcall failed.
class RandomnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optional record of how pd_global_cut reached its answer.
struct PdGlobalTrace {
  bool early_exit = false;
  std::vector<Vertex> probes;
};

/// ceil(log2 n) for n >= 1.
unsigned ceil_log2(std::uint64_t n) noexcept;

/// Engine-call ceiling for pd_global_cut: 3 + 4 (ceil(log2 n) + 1).
unsigned pd_global_call_budget(Vertex n) noexcept;

/// Smallest r with (1 - rho)^r <= 1 / (20 * pd_global_call_budget(n)); 1 for
/// exact engines.
unsigned default_amplification(double rho, Vertex n);

/// Pseudodeterministic minimum s-t cut: the engine's cut of the star
/// extension at s under [w, w_s]. `engine` must be an s-t engine for (s, t).
CutResult pd_st_cut(const WeightedGraph& g, Vertex s, Vertex t,
                    const EngineHandle& engine, std::uint64_t seed);

/// Decides whether (g, wf) has a unique minimum cut using exactly three
/// engine calls. `wf` may carry up to two layers; the test stitches its
/// indicator weight as the next one.
UniquenessVerdict uniqueness_test(const WeightedGraph& g,
                                  const LayeredWeightFn& wf,
                                  const EngineHandle& engine,
                                  std::uint64_t seed);

/// Pseudodeterministic global minimum cut. With every subcall successful the
/// result is the canonical cut (see canonical_cut_oracle); its weight is the
/// layered value under [w, w_s] on the star extension at vertex 1.
/// Throws RandomnessFailure if the binary search exhausts its window.
CutResult pd_global_cut(const WeightedGraph& g, const EngineHandle& engine,
                        std::uint64_t seed, PdGlobalTrace* trace = nullptr);

/// Brute-force family of stitched minimum cuts (n <= 20).
MinCutFamily stitched_min_cut_family(const WeightedGraph& g);

/// The family member whose T side holds the family's largest T vertex,
/// found by enumeration (n <= 20).
CutResult canonical_cut_oracle(const WeightedGraph& g);

}  // namespace pdcut

#endif  // PDCUT_PSEUDODET_HPP
