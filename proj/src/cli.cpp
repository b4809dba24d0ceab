#include "pdcut/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdcut/cut_query.hpp"
#include "pdcut/engines.hpp"
#include "pdcut/pseudodet.hpp"
#include "pdcut/replicate.hpp"
#include "pdcut/streaming.hpp"

namespace pdcut::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string engine = "karger";
  std::uint64_t seed = 0;
  unsigned trials = 0;  // 0: default for the engine
  bool json = false;
};

Json wide_json(Wide v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(v);
  }
  return to_string(v);
}

std::string engine_name(const std::string& flag) {
  if (flag == "karger") return "karger_stein";
  if (flag == "stoer") return "stoer_wagner";
  if (flag == "flow") return "st_flow";
  return "brute_force";
}

struct BuiltEngine {
  EngineHandle handle;
  unsigned trials;
};

BuiltEngine build_global_engine(const CommonOptions& opt, Vertex n) {
  EngineHandle base;
  if (opt.engine == "karger") {
    base = make_karger_stein_engine();
  } else if (opt.engine == "stoer") {
    base = make_stoer_wagner_engine();
  } else {
    base = make_brute_force_engine();
  }
  const unsigned trials =
      opt.trials ? opt.trials : default_amplification(base->rho(), n);
  return {amplify(base, trials), trials};
}

Wide base_value(const WeightedGraph& g, const VertexSet& side) {
  return cut_weight(g, LayeredWeightFn{}, side).base();
}

void emit(std::ostream& out, const Json& report, bool json) {
  if (json) {
    out << report.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << ':';
    if (value.is_array()) {
      for (const auto& item : value) {
        out << ' ' << (item.is_string() ? item.get<std::string>() : item.dump());
      }
    } else if (value.is_string()) {
      out << ' ' << value.get<std::string>();
    } else {
      out << ' ' << value.dump();
    }
    out << '\n';
  }
}

Json cut_report(const char* command, const WeightedGraph& g,
                const CutResult& cut, const LayeredWeightFn& stitched,
                const CommonOptions& opt, unsigned trials,
                std::uint64_t calls) {
  Json r;
  r["side"] = cut.side;
  r["base_value"] = wide_json(base_value(g, cut.side));
  r["stitched_value"] = to_string(stitched.flatten(cut.weight));
  r["command"] = command;
  r["engine"] = engine_name(opt.engine);
  r["seed"] = opt.seed;
  r["trials"] = trials;
  r["engine_calls"] = calls;
  r["status"] = "ok";
  return r;
}

Json failure_report(const char* command, const CommonOptions& opt,
                    unsigned trials, std::uint64_t calls) {
  Json r;
  r["side"] = nullptr;
  r["command"] = command;
  r["engine"] = engine_name(opt.engine);
  r["seed"] = opt.seed;
  r["trials"] = trials;
  r["engine_calls"] = calls;
  r["status"] = "randomness-failure";
  return r;
}

int run_global(const std::string& file, const CommonOptions& opt,
               std::ostream& out) {
  const WeightedGraph g = load_graph_file(file);
  auto [engine, trials] = build_global_engine(opt, g.vertex_count());
  auto counter = std::make_shared<CallCounter>();
  try {
    const CutResult cut = pd_global_cut(g, count_calls(engine, counter), opt.seed);
    const LayeredWeightFn ws = stitch({}, AuxWeight::star(1), g.vertex_count());
    emit(out, cut_report("global", g, cut, ws, opt, trials, counter->value()),
         opt.json);
    return kOk;
  } catch (const RandomnessFailure&) {
    emit(out, failure_report("global", opt, trials, counter->value()), opt.json);
    return kRandomnessFailure;
  }
}

int run_stcut(const std::string& file, Vertex s, Vertex t,
              const CommonOptions& opt, std::ostream& out) {
  const WeightedGraph g = load_graph_file(file);
  const Vertex n = g.vertex_count();
  if (s < 1 || t < 1 || s > n || t > n || s == t) {
    throw std::invalid_argument("--s and --t must be distinct vertices in 1.." +
                                std::to_string(n));
  }
  CommonOptions effective = opt;
  EngineHandle engine;
  if (opt.engine == "brute") {
    engine = make_brute_force_engine(Terminals{s, t});
  } else {
    effective.engine = "flow";
    engine = make_st_flow_engine(s, t);
  }
  auto counter = std::make_shared<CallCounter>();
  const CutResult cut = pd_st_cut(g, s, t, count_calls(engine, counter), opt.seed);
  const LayeredWeightFn ws = stitch({}, AuxWeight::star(s), n);
  Json r = cut_report("stcut", g, cut, ws, effective, 1, counter->value());
  emit(out, r, opt.json);
  return kOk;
}

int run_unique(const std::string& file, const CommonOptions& opt,
               std::ostream& out) {
  const WeightedGraph g = load_graph_file(file);
  auto [engine, trials] = build_global_engine(opt, g.vertex_count());
  auto counter = std::make_shared<CallCounter>();
  const UniquenessVerdict v =
      uniqueness_test(g, LayeredWeightFn{}, count_calls(engine, counter), opt.seed);
  Json r;
  r["unique"] = v.unique();
  if (v.unique()) {
    r["side"] = v.cut->side;
    r["base_value"] = wide_json(v.cut->weight.base());
  } else {
    r["side"] = nullptr;
    r["base_value"] = nullptr;
  }
  r["command"] = "unique";
  r["engine"] = engine_name(opt.engine);
  r["seed"] = opt.seed;
  r["trials"] = trials;
  r["engine_calls"] = counter->value();
  r["status"] = "ok";
  emit(out, r, opt.json);
  return kOk;
}

int run_replicate(const std::string& file, unsigned runs, unsigned threads,
                  const CommonOptions& opt, std::ostream& out) {
  const WeightedGraph g = load_graph_file(file);
  auto [engine, trials] = build_global_engine(opt, g.vertex_count());
  const ReplicationReport rep = replicate(g, engine, runs, opt.seed, threads);
  Json r;
  r["runs"] = rep.runs;
  r["distinct_outputs"] = rep.distinct_outputs();
  r["modal_side"] = rep.outputs.empty() ? Json(nullptr) : Json(rep.outputs.front().side);
  r["modal_count"] = rep.modal_count();
  r["agreement"] = rep.agreement();
  r["failures"] = rep.failures;
  Json outputs = Json::array();
  for (const auto& o : rep.outputs) {
    Json item;
    item["side"] = o.side;
    item["count"] = o.count;
    outputs.push_back(item);
  }
  if (opt.json) r["outputs"] = outputs;
  std::uint64_t max_calls = 0;
  for (auto c : rep.engine_calls) max_calls = std::max(max_calls, c);
  r["command"] = "replicate";
  r["engine"] = engine_name(opt.engine);
  r["seed_base"] = opt.seed;
  r["trials"] = trials;
  r["max_engine_calls"] = max_calls;
  r["status"] = "ok";
  emit(out, r, opt.json);
  return kOk;
}

int run_cutquery(const std::string& file, const CommonOptions& opt,
                 std::ostream& out) {
  const WeightedGraph g = load_graph_file(file);
  const Vertex n = g.vertex_count();
  OracleHandle oracle = oracle_from_graph(g);
  try {
    const QueryRunResult res = pd_global_via_queries(oracle, n, opt.seed);
    Json r;
    r["side"] = res.cut.side;
    r["base_value"] = wide_json(res.cut.weight.base());
    r["command"] = "cutquery";
    r["engine"] = "reconstruct";
    r["queries"] = res.queries;
    r["query_budget"] =
        reconstruction_query_cost(n) * pd_global_call_budget(n);
    r["engine_calls"] = res.engine_calls;
    r["status"] = "ok";
    emit(out, r, opt.json);
    return kOk;
  } catch (const RandomnessFailure&) {
    Json r;
    r["side"] = nullptr;
    r["command"] = "cutquery";
    r["status"] = "randomness-failure";
    emit(out, r, opt.json);
    return kRandomnessFailure;
  }
}

VertexSet parse_side(const std::string& text) {
  VertexSet side;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    side.push_back(static_cast<Vertex>(std::stoul(item)));
  }
  std::sort(side.begin(), side.end());
  return side;
}

struct StreamOptions {
  std::string mode;
  Vertex center = 1;
  std::string aux = "star";
  Vertex threshold = 0;
  std::string side;
  std::string out_path;
};

int run_stream(const std::string& file, const StreamOptions& so,
               const CommonOptions& opt, std::ostream& out) {
  const Stream input = load_stream_file(file);
  const Vertex n = input.n;
  Json r;
  r["command"] = "stream";
  r["mode"] = so.mode;
  if (so.mode == "transform") {
    const AuxWeight aux = so.aux == "indexed"
                              ? AuxWeight::indexed_star(so.center, so.threshold)
                              : AuxWeight::star(so.center);
    SpaceMeter meter;
    Stream transformed{n, transform_stream(input.events, n, aux, &meter)};
    const std::string text = format_stream(transformed);
    if (!so.out_path.empty()) {
      std::ofstream f(so.out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + so.out_path);
      f << text;
    } else if (!opt.json) {
      out << text;
      return kOk;
    }
    r["aux"] = aux.describe();
    r["events"] = transformed.events.size();
    r["peak_words"] = meter.peak();
    r["space_bound"] = kTransformSpaceFactor * n;
    if (opt.json && so.out_path.empty()) r["stream"] = text;
  } else if (so.mode == "accumulate") {
    validate_stream(input.events, n);
    const AuxWeight aux = AuxWeight::indexed_star(so.center, so.threshold);
    const VertexSet side = parse_side(so.side);
    SpaceMeter meter;
    r["aux"] = aux.describe();
    r["value"] = wide_json(accumulate_cut_weight(input.events, n, side, aux, &meter));
    r["peak_words"] = meter.peak();
  } else {
    try {
      const PassRunResult res = pd_global_via_stream(input, opt.seed);
      r["side"] = res.cut.side;
      r["base_value"] = wide_json(res.cut.weight.base());
      r["passes"] = res.passes;
      r["pass_budget"] = pd_global_call_budget(n);
      r["engine_calls"] = res.engine_calls;
      r["peak_words"] = res.peak_words;
    } catch (const RandomnessFailure&) {
      r["status"] = "randomness-failure";
      emit(out, r, opt.json);
      return kRandomnessFailure;
    }
  }
  r["status"] = "ok";
  emit(out, r, opt.json);
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"pdcut: pseudodeterministic minimum cuts"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string file;
  auto add_common = [&](CLI::App* sub, std::vector<std::string> engines) {
    sub->add_option("file", file, "input file")->required();
    sub->add_option("--engine", opt.engine, "minimum-cut engine")
        ->check(CLI::IsMember(std::move(engines)));
    sub->add_option("--seed", opt.seed, "base seed (default 0)");
    sub->add_option("--trials", opt.trials,
                    "engine amplification trials (default: r*)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", opt.json, "print a JSON report");
  };
  const std::vector<std::string> global_engines{"karger", "stoer", "brute"};

  auto* global = app.add_subcommand("global", "pseudodeterministic global minimum cut");
  add_common(global, global_engines);

  Vertex s = 0, t = 0;
  auto* stcut = app.add_subcommand("stcut", "pseudodeterministic minimum s-t cut");
  add_common(stcut, {"karger", "stoer", "brute", "flow"});
  stcut->add_option("--s", s, "source vertex")->required();
  stcut->add_option("--t", t, "sink vertex")->required();

  auto* unique = app.add_subcommand("unique", "test whether the minimum cut is unique");
  add_common(unique, global_engines);

  unsigned runs = 100, threads = 1;
  auto* repl = app.add_subcommand("replicate", "replication experiment");
  add_common(repl, global_engines);
  repl->add_option("--runs", runs, "independent runs")->check(CLI::PositiveNumber);
  repl->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* cutquery = app.add_subcommand("cutquery", "run through a cut-query oracle");
  add_common(cutquery, global_engines);

  StreamOptions so;
  auto* stream = app.add_subcommand("stream", "streaming transformations");
  add_common(stream, global_engines);
  stream->add_option("--mode", so.mode, "transform | accumulate | global")
      ->required()
      ->check(CLI::IsMember({"transform", "accumulate", "global"}));
  stream->add_option("--center", so.center, "star center (default 1)");
  stream->add_option("--aux", so.aux, "star | indexed (transform)")
      ->check(CLI::IsMember({"star", "indexed"}));
  stream->add_option("--x", so.threshold, "indexed-star threshold");
  stream->add_option("--side", so.side, "comma-separated cut side (accumulate)");
  stream->add_option("--out", so.out_path, "write the transformed stream here");

  std::vector<const char*> argv{"pdcut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrInputError;
  }

  try {
    if (*global) return run_global(file, opt, out);
    if (*stcut) return run_stcut(file, s, t, opt, out);
    if (*unique) return run_unique(file, opt, out);
    if (*repl) return run_replicate(file, runs, threads, opt, out);
    if (*cutquery) return run_cutquery(file, opt, out);
    if (*stream) {
      if (so.mode == "accumulate" && (so.side.empty() || so.threshold == 0)) {
        throw std::invalid_argument("accumulate needs --side and --x");
      }
      return run_stream(file, so, opt, out);
    }
  } catch (const std::exception& e) {
    err << "pdcut: " << e.what() << '\n';
    return kUsageOrInputError;
  }
  return kUsageOrInputError;
}

}  // namespace pdcut::cli
