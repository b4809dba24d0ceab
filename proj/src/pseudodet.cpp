#include "pdcut/pseudodet.hpp"

#include <algorithm>
#include <cmath>

namespace pdcut {

namespace {

LayeredValue truncate(const LayeredValue& v, std::size_t arity) {
  LayeredValue out(arity);
  for (std::size_t i = 0; i < arity; ++i) out[i] = v[i];
  return out;
}

LayeredWeightFn star_weights(Vertex n) {
  return stitch(LayeredWeightFn{}, AuxWeight::star(kCanonicalSource), n);
}

void require_global_engine(const EngineHandle& engine) {
  if (!engine) throw std::invalid_argument("null engine");
  if (engine->terminals()) {
    throw std::invalid_argument("a global minimum-cut engine is required");
  }
}

}  // namespace

std::size_t MinCutFamily::canonical_index() const {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!std::binary_search(cuts[i].side.begin(), cuts[i].side.end(), t_max)) {
      return i;
    }
  }
  throw std::logic_error("no family member holds t_max");
}

unsigned ceil_log2(std::uint64_t n) noexcept {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

unsigned pd_global_call_budget(Vertex n) noexcept {
  return 3 + 4 * (ceil_log2(n) + 1);
}

unsigned default_amplification(double rho, Vertex n) {
  if (rho <= 0.0 || rho > 1.0) {
    throw std::invalid_argument("rho must lie in (0, 1]");
  }
  if (rho >= 1.0) return 1;
  const double target = 1.0 / (20.0 * pd_global_call_budget(n));
  unsigned r = 1;
  while (std::pow(1.0 - rho, r) > target) ++r;
  return r;
}

CutResult pd_st_cut(const WeightedGraph& g, Vertex s, Vertex t,
                    const EngineHandle& engine, std::uint64_t seed) {
  if (s == t) throw std::invalid_argument("pd_st_cut: s == t");
  if (!engine || engine->terminals() != Terminals{s, t}) {
    throw std::invalid_argument("pd_st_cut: engine must target the same (s, t)");
  }
  const Vertex n = g.vertex_count();
  const WeightedGraph extended = build_star_extension(g, s);
  const LayeredWeightFn wf = stitch(LayeredWeightFn{}, AuxWeight::star(s), n);
  return engine->solve(extended, wf, seed);
}

UniquenessVerdict uniqueness_test(const WeightedGraph& g,
                                  const LayeredWeightFn& wf,
                                  const EngineHandle& engine,
                                  std::uint64_t seed) {
  require_global_engine(engine);
  const Vertex n = g.vertex_count();
  const Vertex s = kCanonicalSource;

  CutResult first = engine->solve(g, wf, split_seed(seed, 0));
  const VertexSet& side = first.side;
  const Vertex t = complement(side, n).front();

  const WeightedGraph with_s_star = build_star_extension(g, s);
  const LayeredWeightFn wf_s =
      stitch(wf, AuxWeight::indicator_cut_star(s, side, n), n);
  const WeightedGraph with_t_star = build_star_extension(g, t);
  const LayeredWeightFn wf_t =
      stitch(wf, AuxWeight::indicator_cut_star(t, side, n), n);

  const CutResult second = engine->solve(with_s_star, wf_s, split_seed(seed, 1));
  const CutResult third = engine->solve(with_t_star, wf_t, split_seed(seed, 2));

  if (second.side == side && third.side == side) {
    return UniquenessVerdict{std::move(first)};
  }
  return UniquenessVerdict{};
}

CutResult pd_global_cut(const WeightedGraph& g, const EngineHandle& engine,
                        std::uint64_t seed, PdGlobalTrace* trace) {
  require_global_engine(engine);
  const Vertex n = g.vertex_count();
  const WeightedGraph extended = build_star_extension(g, kCanonicalSource);
  const LayeredWeightFn ws = star_weights(n);

  std::uint64_t stream = 0;
  UniquenessVerdict verdict =
      uniqueness_test(extended, ws, engine, split_seed(seed, stream++));
  if (verdict.unique()) {
    if (trace) trace->early_exit = true;
    return std::move(*verdict.cut);
  }

  SearchState window{1, n};
  while (window.open()) {
    const Vertex x = window.probe();
    if (trace) trace->probes.push_back(x);
    const LayeredWeightFn wfx =
        stitch(ws, AuxWeight::indexed_star(kCanonicalSource, x), n);

    CutResult cut = engine->solve(extended, wfx, split_seed(seed, stream++));
    const Wide t_size = n - cut.side.size();
    const Wide probe_value = cut.weight[2];

    UniquenessVerdict check =
        uniqueness_test(extended, wfx, engine, split_seed(seed, stream++));
    if (check.unique() && check.cut->side == cut.side &&
        probe_value + 1 == t_size) {
      return CutResult{std::move(cut.side), truncate(cut.weight, 2)};
    }
    if (probe_value == t_size) {
      window.upper = x - 1;
    } else {
      window.lower = x + 1;
    }
  }
  throw RandomnessFailure(
      "binary search closed without isolating a cut; a randomized subcall "
      "returned a non-minimum cut");
}

MinCutFamily stitched_min_cut_family(const WeightedGraph& g) {
  const Vertex n = g.vertex_count();
  const WeightedGraph extended = build_star_extension(g, kCanonicalSource);
  MinCutSets sets = brute_force_min_cut_family(extended, star_weights(n));
  MinCutFamily family;
  std::vector<char> in_union(n + 1, 0);
  for (VertexSet& side : sets.sides) {
    for (Vertex v : complement(side, n)) in_union[v] = 1;
    family.cuts.push_back(CutResult{std::move(side), sets.value});
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (in_union[v]) family.union_t.push_back(v);
  }
  family.t_max = family.union_t.back();
  return family;
}

CutResult canonical_cut_oracle(const WeightedGraph& g) {
  MinCutFamily family = stitched_min_cut_family(g);
  return family.cuts[family.canonical_index()];
}

}  // namespace pdcut
