#include "pdcut/streaming.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "flat_graph.hpp"
#include "pdcut/pseudodet.hpp"

namespace pdcut {

StreamEvent StreamEvent::insert(Vertex a, Vertex b, Wide w) {
  return StreamEvent{Op::insert, std::min(a, b), std::max(a, b), w};
}

StreamEvent StreamEvent::remove(Vertex a, Vertex b) {
  return StreamEvent{Op::remove, std::min(a, b), std::max(a, b), 0};
}

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void check_endpoints(const StreamEvent& e, Vertex n) {
  if (e.u < 1 || e.v > n) {
    throw StreamError("stream edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ") outside 1.." +
                      std::to_string(n));
  }
  if (e.u == e.v) {
    throw StreamError("stream self-loop at " + std::to_string(e.u));
  }
}

std::string edge_name(const StreamEvent& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex parse_vertex(std::string_view s, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() ||
      v > std::numeric_limits<Vertex>::max()) {
    throw StreamError("bad vertex '" + std::string(s) + "' at line " +
                      std::to_string(line_no));
  }
  return static_cast<Vertex>(v);
}

}  // namespace

Stream parse_stream(std::string_view text) {
  Stream out;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto f = split_fields(line);
    if (!f.empty() && !f[0].starts_with('#')) {
      const std::string where = " at line " + std::to_string(line_no);
      if (f[0] == "p") {
        if (have_header) throw StreamError("duplicate header" + where);
        if (f.size() != 3 || f[1] != "stream") {
          throw StreamError("malformed header" + where);
        }
        out.n = parse_vertex(f[2], line_no);
        if (out.n < 2) throw StreamError("stream needs n >= 2" + where);
        have_header = true;
      } else if (f[0] == "i" || f[0] == "d") {
        if (!have_header) throw StreamError("event before header" + where);
        const bool ins = f[0] == "i";
        if (f.size() != (ins ? 4u : 3u)) {
          throw StreamError("malformed event" + where);
        }
        const Vertex u = parse_vertex(f[1], line_no);
        const Vertex v = parse_vertex(f[2], line_no);
        StreamEvent e;
        if (ins) {
          Wide w;
          try {
            w = parse_wide(f[3]);
          } catch (const std::invalid_argument&) {
            throw StreamError("bad weight" + where);
          }
          e = StreamEvent::insert(u, v, w);
        } else {
          e = StreamEvent::remove(u, v);
        }
        try {
          check_endpoints(e, out.n);
        } catch (const StreamError& err) {
          throw StreamError(err.what() + where);
        }
        out.events.push_back(e);
      } else {
        throw StreamError("unknown record" + where);
      }
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw StreamError("missing header");
  return out;
}

Stream load_stream_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stream(buf.str());
}

std::string format_stream(const Stream& stream) {
  std::string out = "p stream " + std::to_string(stream.n) + "\n";
  for (const StreamEvent& e : stream.events) {
    if (e.op == StreamEvent::Op::insert) {
      out += "i " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
             to_string(e.w) + "\n";
    } else {
      out += "d " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
  }
  return out;
}

void validate_stream(std::span<const StreamEvent> events, Vertex n) {
  std::unordered_set<std::uint64_t> live;
  for (const StreamEvent& e : events) {
    check_endpoints(e, n);
    const auto k = pair_key(e.u, e.v);
    if (e.op == StreamEvent::Op::insert) {
      if (!live.insert(k).second) {
        throw StreamError("double insert of " + edge_name(e));
      }
    } else if (live.erase(k) == 0) {
      throw StreamError("dangling delete of " + edge_name(e));
    }
  }
}

// ------------------------------------------------------------ StarTransformer

StarTransformer::StarTransformer(Vertex n, AuxWeight aux, SpaceMeter* meter)
    : n_(n),
      aux_(std::move(aux)),
      center_(aux_.center()),
      slots_(std::size_t(n) + 1, Slot::unseen),
      meter_(meter) {
  if (center_ < 1 || center_ > n) {
    throw std::invalid_argument("transform: center out of range");
  }
  if (meter_) meter_->observe(words());
}

std::size_t StarTransformer::words() const noexcept {
  std::size_t aux_words = 1;
  if (std::holds_alternative<IndexedStarWeight>(aux_.variant())) aux_words = 2;
  if (std::holds_alternative<IndicatorCutStarWeight>(aux_.variant())) {
    aux_words = 1 + n_;
  }
  return n_ + aux_words;
}

void StarTransformer::push(const StreamEvent& e, const Sink& emit) {
  if (finished_) throw std::logic_error("transform: push after finish");
  check_endpoints(e, n_);
  const bool star = e.u == center_ || e.v == center_;
  const Vertex far = e.u == center_ ? e.v : e.u;
  const Wide aux = aux_.value(e.u, e.v);

  if (e.op == StreamEvent::Op::insert) {
    const Wide w = checked_add(checked_mul(e.w, Wide(n_) + 1), aux);
    if (star) {
      Slot& slot = slots_[far];
      if (slot == Slot::live_input) {
        throw StreamError("double insert of " + edge_name(e));
      }
      if (slot == Slot::live_aux_only) emit(StreamEvent::remove(e.u, e.v));
      slot = Slot::live_input;
    }
    emit(StreamEvent::insert(e.u, e.v, w));
  } else {
    if (star) {
      Slot& slot = slots_[far];
      if (slot != Slot::live_input) {
        throw StreamError("dangling delete of " + edge_name(e));
      }
      emit(e);
      emit(StreamEvent::insert(e.u, e.v, aux));
      slot = Slot::live_aux_only;
    } else {
      emit(e);
    }
  }
  if (meter_) meter_->observe(words());
}

void StarTransformer::finish(const Sink& emit) {
  if (finished_) return;
  for (Vertex v = 1; v <= n_; ++v) {
    if (v == center_ || slots_[v] != Slot::unseen) continue;
    emit(StreamEvent::insert(center_, v, aux_.value(center_, v)));
    slots_[v] = Slot::live_aux_only;
  }
  finished_ = true;
  if (meter_) meter_->observe(words());
}

std::vector<StreamEvent> transform_stream(std::span<const StreamEvent> events,
                                          Vertex n, const AuxWeight& aux,
                                          SpaceMeter* meter) {
  validate_stream(events, n);
  std::vector<StreamEvent> out;
  out.reserve(events.size() + n);
  StarTransformer transformer(n, aux, meter);
  auto sink = [&out](const StreamEvent& e) { out.push_back(e); };
  for (const StreamEvent& e : events) transformer.push(e, sink);
  transformer.finish(sink);
  return out;
}

Wide accumulate_cut_weight(std::span<const StreamEvent> events, Vertex n,
                           std::span<const Vertex> side, const AuxWeight& aux,
                           SpaceMeter* meter) {
  if (!std::holds_alternative<IndexedStarWeight>(aux.variant())) {
    throw std::invalid_argument(
        "accumulate_cut_weight supports indexed-star weights only");
  }
  require_proper_side(side, n);
  const auto in = membership(side, n);  // the stored cut side
  Wide total = 0;
  if (meter) meter->observe(kAccumulateExtraWords);  // total, center, threshold
  for (const StreamEvent& e : events) {
    check_endpoints(e, n);
    if (in[e.u] == in[e.v]) continue;
    const Wide a = aux.value(e.u, e.v);
    if (e.op == StreamEvent::Op::insert) {
      total += a;
    } else {
      if (total < a) throw StreamError("delete of an edge never inserted");
      total -= a;
    }
  }
  return total;
}

WeightedGraph materialize(std::span<const StreamEvent> events, Vertex n) {
  std::map<std::pair<Vertex, Vertex>, Wide> live;
  for (const StreamEvent& e : events) {
    check_endpoints(e, n);
    if (e.op == StreamEvent::Op::insert) {
      if (!live.emplace(std::pair{e.u, e.v}, e.w).second) {
        throw StreamError("double insert of " + edge_name(e));
      }
    } else if (live.erase({e.u, e.v}) == 0) {
      throw StreamError("dangling delete of " + edge_name(e));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(live.size());
  for (const auto& [key, w] : live) {
    if (w > std::numeric_limits<Weight>::max()) {
      throw std::overflow_error("materialize: weight exceeds 64 bits");
    }
    edges.push_back(Edge{key.first, key.second, static_cast<Weight>(w)});
  }
  return WeightedGraph::create(n, std::move(edges), /*allow_zero_weights=*/true);
}

std::vector<StreamEvent> insert_stream(const WeightedGraph& g) {
  std::vector<StreamEvent> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(StreamEvent::insert(e.u, e.v, e.w));
  return out;
}

WeightedGraph stitched_star_extension(const WeightedGraph& g,
                                      const AuxWeight& aux) {
  const Vertex n = g.vertex_count();
  const WeightedGraph extended = build_star_extension(g, aux.center());
  const LayeredWeightFn wf = stitch(LayeredWeightFn{}, aux, n);
  std::vector<Edge> edges;
  edges.reserve(extended.edge_count());
  for (const Edge& e : extended.edges()) {
    const Wide flat = wf.flatten(wf.edge_value(e));
    if (flat > std::numeric_limits<Weight>::max()) {
      throw std::overflow_error("stitched weight exceeds 64 bits");
    }
    edges.push_back(Edge{e.u, e.v, static_cast<Weight>(flat)});
  }
  return WeightedGraph::create(n, std::move(edges), /*allow_zero_weights=*/true);
}

// ---------------------------------------------------------------- pass harness

namespace {

class StreamPassEngine final : public MinCutEngine {
 public:
  StreamPassEngine(const Stream& input, std::shared_ptr<CallCounter> passes,
                   std::shared_ptr<SpaceMeter> space)
      : input_(input), passes_(std::move(passes)), space_(std::move(space)) {}

  CutResult solve(const WeightedGraph& g, const LayeredWeightFn& wf,
                  std::uint64_t) const override {
    const Vertex n = input_.n;
    if (g.vertex_count() != n) {
      throw std::invalid_argument("stream engine: vertex count mismatch");
    }
    std::vector<StarTransformer> chain;
    chain.reserve(wf.layer_count());
    for (std::size_t i = 0; i < wf.layer_count(); ++i) {
      if (wf.bounds()[i] != n) {
        throw std::invalid_argument("stream engine expects layer bounds = n");
      }
      chain.emplace_back(n, wf.layers()[i]);
    }

    std::map<std::pair<Vertex, Vertex>, Wide> live;
    std::function<void(std::size_t, const StreamEvent&)> emit_at =
        [&](std::size_t level, const StreamEvent& e) {
          if (level == chain.size()) {
            if (e.op == StreamEvent::Op::insert) {
              live[{e.u, e.v}] = e.w;
            } else {
              live.erase({e.u, e.v});
            }
            return;
          }
          chain[level].push(e, [&, level](const StreamEvent& out) {
            emit_at(level + 1, out);
          });
        };

    passes_->increment();
    for (const StreamEvent& e : input_.events) emit_at(0, e);
    for (std::size_t level = 0; level < chain.size(); ++level) {
      chain[level].finish([&, level](const StreamEvent& out) {
        emit_at(level + 1, out);
      });
    }
    std::size_t words = 0;
    for (const auto& t : chain) words += t.words();
    space_->observe(words);

    detail::FlatGraph flat;
    flat.n = n;
    for (const auto& [key, w] : live) flat.add(key.first - 1, key.second - 1, w);
    const detail::FlatCut cut = detail::stoer_wagner_core(flat);
    CutResult r;
    r.side = normalize_side(detail::to_vertex_set(cut.side), n, 1);
    r.weight = wf.unflatten(cut.value);
    return r;
  }
  double rho() const noexcept override { return 1.0; }
  EngineKind kind() const noexcept override { return EngineKind::external; }

 private:
  const Stream& input_;
  std::shared_ptr<CallCounter> passes_;
  std::shared_ptr<SpaceMeter> space_;
};

}  // namespace

PassRunResult pd_global_via_stream(const Stream& input, std::uint64_t seed) {
  validate_stream(input.events, input.n);
  for (const StreamEvent& e : input.events) {
    if (e.op == StreamEvent::Op::insert && e.w == 0) {
      throw StreamError("input stream weights must be positive");
    }
  }
  auto passes = std::make_shared<CallCounter>();
  auto calls = std::make_shared<CallCounter>();
  auto space = std::make_shared<SpaceMeter>();
  EngineHandle engine =
      count_calls(std::make_shared<StreamPassEngine>(input, passes, space), calls);
  PassRunResult out;
  out.cut = pd_global_cut(WeightedGraph::empty(input.n), engine, seed);
  out.passes = passes->value();
  out.engine_calls = calls->value();
  out.peak_words = space->peak();
  return out;
}

}  // namespace pdcut
