#ifndef PDCUT_STREAMING_HPP
#define PDCUT_STREAMING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdcut/cut.hpp"
#include "pdcut/engines.hpp"
#include "pdcut/graph.hpp"
#include "pdcut/weights.hpp"

namespace pdcut {

/// insert(u, v, w) or delete(u, v); endpoints stored with u < v.
struct StreamEvent {
  enum class Op { insert, remove };

  Op op;
  Vertex u;
  Vertex v;
  Wide w;  // 0 for deletes

  static StreamEvent insert(Vertex a, Vertex b, Wide w);
  static StreamEvent remove(Vertex a, Vertex b);

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

struct Stream {
  Vertex n = 0;
  std::vector<StreamEvent> events;
};

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p stream <n>" header, then "i <u> <v> <w>" / "d <u> <v>" lines; '#'
/// comments. Weights may be 0 (transformed streams carry aux-only edges).
Stream parse_stream(std::string_view text);
Stream load_stream_file(const std::string& path);
std::string format_stream(const Stream& stream);

/// Full validity check: range, self-loops, no insert of a live edge, no
/// delete of a missing edge. Uses O(live edges) memory; it is a checker,
/// not part of any metered streaming pass.
void validate_stream(std::span<const StreamEvent> events, Vertex n);

/// Peak number of machine words retained between events.
class SpaceMeter {
 public:
  void observe(std::size_t words) noexcept {
    current_ = words;
    if (words > peak_) peak_ = words;
  }
  std::size_t current() const noexcept { return current_; }
  std::size_t peak() const noexcept { return peak_; }

 private:
  std::size_t current_ = 0;
  std::size_t peak_ = 0;
};

/// Documented constant: transform state never exceeds
/// kTransformSpaceFactor * n words.
inline constexpr std::size_t kTransformSpaceFactor = 3;
/// Documented constant: accumulate_cut_weight keeps at most this many words
/// besides the stored cut side.
inline constexpr std::size_t kAccumulateExtraWords = 3;

/// One-pass transformer that turns a stream of G into a stream of the star
/// extension at aux.center() with weights w * (n + 1) + aux(e).
///
/// State is one presence slot per star edge plus the aux parameters.
/// A deleted star edge is re-inserted at its aux-only weight so the output
/// always contains the whole star; star edges never seen are appended by
/// finish() in ascending order of the far endpoint.
class StarTransformer {
 public:
  using Sink = std::function<void(const StreamEvent&)>;

  StarTransformer(Vertex n, AuxWeight aux, SpaceMeter* meter = nullptr);

  void push(const StreamEvent& event, const Sink& emit);
  void finish(const Sink& emit);

  std::size_t words() const noexcept;

 private:
  enum class Slot : std::uint8_t { unseen, live_input, live_aux_only };

  Vertex n_;
  AuxWeight aux_;
  Vertex center_;
  std::vector<Slot> slots_;  // indexed by far endpoint
  SpaceMeter* meter_;
  bool finished_ = false;
};

/// Validates `events` and runs a StarTransformer over them.
std::vector<StreamEvent> transform_stream(std::span<const StreamEvent> events,
                                          Vertex n, const AuxWeight& aux,
                                          SpaceMeter* meter = nullptr);

/// One-pass W = sum of aux(e) over live edges crossing `side`. Only
/// indexed-star weights are accepted.
Wide accumulate_cut_weight(std::span<const StreamEvent> events, Vertex n,
                           std::span<const Vertex> side, const AuxWeight& aux,
                           SpaceMeter* meter = nullptr);

/// Final live edge set as a graph (zero weights kept). Throws StreamError on
/// stream violations and std::overflow_error for weights above 64 bits.
WeightedGraph materialize(std::span<const StreamEvent> events, Vertex n);

/// Insert-only stream of g's edges in the given order.
std::vector<StreamEvent> insert_stream(const WeightedGraph& g);

/// In-memory counterpart of transform_stream: the star extension at
/// aux.center() with each weight replaced by w * (n + 1) + aux(e).
WeightedGraph stitched_star_extension(const WeightedGraph& g,
                                      const AuxWeight& aux);

struct PassRunResult {
  CutResult cut;
  std::uint64_t passes = 0;
  std::uint64_t engine_calls = 0;
  std::size_t peak_words = 0;  // largest transformer chain state
};

/// pd_global_cut in which each engine invocation is one pass over `input`:
/// the events are pushed through one StarTransformer per layer and the
/// resulting graph is solved exactly.
PassRunResult pd_global_via_stream(const Stream& input,
                                   std::uint64_t seed = 0);

}  // namespace pdcut

#endif  // PDCUT_STREAMING_HPP
