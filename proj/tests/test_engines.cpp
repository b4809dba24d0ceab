#include <doctest.h>

#include <random>
#include <thread>

#include "pdcut/cut.hpp"
#include "pdcut/engines.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace pdcut;
using namespace pdcut::testing;

namespace {

void check_sound(const WeightedGraph& g, const LayeredWeightFn& wf,
                 const CutResult& r, Vertex source) {
  const Vertex n = g.vertex_count();
  REQUIRE(!r.side.empty());
  REQUIRE(r.side.size() < n);
  CHECK(std::is_sorted(r.side.begin(), r.side.end()));
  CHECK(std::binary_search(r.side.begin(), r.side.end(), source));
  CHECK(r.weight == cut_weight(g, wf, r.side));
}

LayeredWeightFn random_layers(std::mt19937_64& rng, Vertex n) {
  const Vertex c = std::uniform_int_distribution<Vertex>(1, n)(rng);
  const Vertex x = std::uniform_int_distribution<Vertex>(1, n + 1)(rng);
  switch (rng() % 3) {
    case 0: return {};
    case 1: return with({AuxWeight::star(c)}, n);
    default: return with({AuxWeight::star(c), AuxWeight::indexed_star(c, x)}, n);
  }
}

}  // namespace

TEST_CASE("brute-force families") {
  SUBCASE("triangle") {
    auto fam = brute_force_min_cut_family(triangle(), {});
    CHECK(fam.value == lv({3}));
    CHECK(fam.sides == std::vector<VertexSet>{{1}});
  }
  SUBCASE("C4") {
    // every side containing 1 except {1,3} cuts exactly two edges
    const auto naive = naive_min_family(naive_edges(c4(), {}), {}, 4);
    REQUIRE(naive.sides.size() == 6);
    auto fam = brute_force_min_cut_family(c4(), {});
    CHECK(fam.value == lv({2}));
    CHECK(fam.sides == naive.sides);
    CHECK(fam.sides == std::vector<VertexSet>{{1}, {1, 2}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 4}});
  }
  SUBCASE("P3 with s=1, t=3") {
    auto fam = brute_force_min_cut_family(p3(), {}, Terminals{1, 3});
    CHECK(fam.value == lv({1}));
    CHECK(fam.sides == std::vector<VertexSet>{{1}, {1, 2}});
  }
  SUBCASE("s-t sides contain s when s is not vertex 1") {
    auto fam = brute_force_min_cut_family(p3(), {}, Terminals{3, 1});
    CHECK(fam.sides == std::vector<VertexSet>{{2, 3}, {3}});
  }
}

TEST_CASE("brute force refuses large graphs") {
  auto g = WeightedGraph::create(21, {{1, 2, 1}});
  CHECK_THROWS(brute_force_min_cut_family(g, {}));
}

TEST_CASE("brute force agrees with naive enumeration on the n <= 6 corpus") {
  for (const auto& g : exhaustive_corpus(6, 1, 5, 41)) {
    const Vertex n = g.vertex_count();
    auto fam = brute_force_min_cut_family(g, {});
    auto naive = naive_min_family(naive_edges(g, {}), {}, n);
    CHECK(fam.sides == naive.sides);
    CHECK(fam.value[0] == Wide(naive.value[0]));

    auto ext = build_star_extension(g, n);
    auto wf = with({AuxWeight::star(n), AuxWeight::indexed_star(n, 3)}, n);
    auto st = brute_force_min_cut_family(ext, wf, Terminals{2, 1});
    auto nst = naive_min_family(naive_edges(g, {n}),
                                {NaiveAux::star(n), NaiveAux::indexed(n, 3)}, n, 2, 1);
    CHECK(st.sides == nst.sides);
  }
}

TEST_CASE("stoer_wagner examples") {
  auto r = stoer_wagner(triangle(), {});
  CHECK(r.weight == lv({3}));
  CHECK(r.side == VertexSet{1});

  auto c = stoer_wagner(c4(), {});
  CHECK(c.weight == lv({2}));
  auto fam = brute_force_min_cut_family(c4(), {});
  CHECK(std::find(fam.sides.begin(), fam.sides.end(), c.side) != fam.sides.end());

  CHECK(stoer_wagner(two_edges(), {}).weight == lv({0}));
}

TEST_CASE("karger_stein examples") {
  auto ks = make_karger_stein_engine();
  CHECK(ks->rho() == doctest::Approx(2.0 / 3.0));
  CHECK(ks->kind() == EngineKind::karger_stein);

  int successes = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = ks->solve(triangle(), {}, seed);
    check_sound(triangle(), {}, r, 1);
    if (r.weight == lv({3})) ++successes;
  }
  CHECK(successes >= 50);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = ks->solve(single_edge(), {}, seed);
    CHECK(r.side == VertexSet{1});
    CHECK(r.weight == lv({5}));
  }

  Wide best = ~Wide(0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = ks->solve(c4(), {}, seed);
    CHECK(r.weight[0] >= 2);
    best = std::min(best, r.weight[0]);
  }
  CHECK(best == 2);
}

TEST_CASE("karger_stein handles all-zero weights and disconnected inputs") {
  auto g = WeightedGraph::create(4, {{1, 2, 0}, {3, 4, 0}}, true);
  auto r = karger_stein(g, {}, 5);
  check_sound(g, {}, r, 1);
  CHECK(r.weight == lv({0}));
  CHECK(karger_stein(two_edges(), {}, 9).weight == lv({0}));
}

TEST_CASE("karger_stein repetition count") {
  CHECK(karger_stein_repetitions(2) == 2);   // ceil(3 ln^2 2) = ceil(1.44)
  CHECK(karger_stein_repetitions(50) == 46); // ceil(3 * 15.30)
}

TEST_CASE("st_flow examples") {
  auto r = st_flow_min_cut(p3(), {}, 1, 3);
  CHECK(r.weight == lv({1}));
  CHECK(r.side == VertexSet{1});

  auto e = st_flow_min_cut(single_edge(), {}, 1, 2);
  CHECK(e.side == VertexSet{1});
  CHECK(e.weight == lv({5}));

  auto t = st_flow_min_cut(triangle(), {}, 1, 3);
  CHECK(t.weight == lv({3}));
  CHECK(t.side == VertexSet{1});

  CHECK_THROWS(st_flow_min_cut(p3(), {}, 2, 2));
  auto fe = make_st_flow_engine(3, 1);
  CHECK(fe->source() == 3);
  CHECK(fe->solve(p3(), {}, 0).side == VertexSet{3});
}

TEST_CASE("exact engines declare rho = 1") {
  CHECK(make_stoer_wagner_engine()->rho() == 1.0);
  CHECK(make_brute_force_engine()->rho() == 1.0);
  CHECK(make_st_flow_engine(1, 2)->rho() == 1.0);
}

TEST_CASE("amplify") {
  auto ks = make_karger_stein_engine();
  SUBCASE("one trial is the identity") {
    auto a1 = amplify(ks, 1);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 30; ++i) {
      auto g = random_graph_in(rng, 2, 12, 30, 5);
      auto wf = random_layers(rng, g.vertex_count());
      auto ext = wf.layer_count() ? build_star_extension(g, wf.layers()[0].center()) : g;
      const auto seed = rng();
      CHECK(a1->solve(ext, wf, seed) == ks->solve(ext, wf, seed));
    }
  }
  SUBCASE("declared rho") {
    CHECK(amplified_rho(2.0 / 3.0, 4) == doctest::Approx(80.0 / 81.0));
    CHECK(amplify(ks, 4)->rho() == doctest::Approx(80.0 / 81.0));
    CHECK(amplify(make_stoer_wagner_engine(), 5)->rho() == 1.0);
  }
  SUBCASE("C4 with eight trials") {
    auto a8 = amplify(ks, 8);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      if (a8->solve(c4(), {}, seed).weight == lv({2})) ++successes;
    }
    CHECK(successes >= 99);
  }
  SUBCASE("zero trials rejected") { CHECK_THROWS(amplify(ks, 0)); }
}

TEST_CASE("property: amplification is monotone in the trial count") {
  // a deliberately weak engine so that trials actually differ
  auto weak = make_karger_stein_engine(0.05);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    auto g = random_graph_in(rng, 6, 16, 40, 6);
    const auto seed = rng();
    LayeredValue prev;
    for (unsigned k = 1; k <= 6; ++k) {
      auto v = amplify(weak, k)->solve(g, {}, seed).weight;
      if (k > 1) CHECK(compare_layered(v, prev) != std::strong_ordering::greater);
      prev = v;
    }
  }
}

TEST_CASE("property: exact engines match brute force on the n <= 6 corpus") {
  const auto corpus = exhaustive_corpus(6, 3, 5, 606);
  CHECK(corpus.size() == 3 * (1 + 2 + 6 + 21 + 112));
  for (const auto& g : corpus) {
    const Vertex n = g.vertex_count();
    const auto fam = brute_force_min_cut_family(g, {});
    const auto sw = stoer_wagner(g, {});
    CHECK(sw.weight == fam.value);
    check_sound(g, {}, sw, 1);
    for (Vertex t = 2; t <= n; ++t) {
      const auto st = brute_force_min_cut_family(g, {}, Terminals{1, t});
      const auto fl = st_flow_min_cut(g, {}, 1, t);
      CHECK(fl.weight == st.value);
      CHECK(std::binary_search(st.sides.begin(), st.sides.end(), fl.side));
    }
  }
}

TEST_CASE("property: exact engines match brute force on random graphs up to n = 12") {
  std::mt19937_64 rng(1212);
  for (int i = 0; i < 200; ++i) {
    auto g0 = random_graph_in(rng, 2, 12, 40, 5);
    const Vertex n = g0.vertex_count();
    auto wf = random_layers(rng, n);
    auto g = wf.layer_count() ? build_star_extension(g0, wf.layers()[0].center()) : g0;
    const auto fam = brute_force_min_cut_family(g, wf);
    const auto sw = stoer_wagner(g, wf);
    CHECK(sw.weight == fam.value);
    check_sound(g, wf, sw, 1);

    const Vertex s = std::uniform_int_distribution<Vertex>(1, n)(rng);
    Vertex t = std::uniform_int_distribution<Vertex>(1, n - 1)(rng);
    if (t >= s) ++t;
    const auto st = brute_force_min_cut_family(g, wf, Terminals{s, t});
    const auto fl = st_flow_min_cut(g, wf, s, t);
    CHECK(fl.weight == st.value);
    check_sound(g, wf, fl, s);
    CHECK_FALSE(std::binary_search(fl.side.begin(), fl.side.end(), t));
  }
}

TEST_CASE("property: seeded determinism and soundness for every engine kind") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto g0 = random_graph_in(rng, 2, 14, 50, 8);
    const Vertex n = g0.vertex_count();
    auto wf = random_layers(rng, n);
    auto g = wf.layer_count() ? build_star_extension(g0, wf.layers()[0].center()) : g0;
    const std::vector<EngineHandle> engines = {
        make_karger_stein_engine(), make_stoer_wagner_engine(),
        make_brute_force_engine(), make_st_flow_engine(n, 1),
        amplify(make_karger_stein_engine(), 3)};
    const auto seed = rng();
    for (const auto& e : engines) {
      const auto first = e->solve(g, wf, seed);
      check_sound(g, wf, first, e->source());
      for (int rep = 0; rep < 2; ++rep) CHECK(e->solve(g, wf, seed) == first);
    }
  }
}

TEST_CASE("karger_stein succeeds far above its declared rate on random graphs") {
  std::mt19937_64 rng(99);
  auto ks = make_karger_stein_engine();
  int calls = 0, hits = 0;
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph_in(rng, 2, 30, 80, 5);
    const auto best = stoer_wagner(g, {}).weight;
    for (int k = 0; k < 5; ++k) {
      ++calls;
      if (ks->solve(g, {}, rng()).weight == best) ++hits;
    }
  }
  CHECK(hits * 3 >= calls * 2);
}

TEST_CASE("count_calls counts from concurrent callers") {
  auto counter = std::make_shared<CallCounter>();
  auto e = count_calls(make_stoer_wagner_engine(), counter);
  CHECK(e->kind() == EngineKind::stoer_wagner);
  std::vector<std::jthread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&] {
      for (int i = 0; i < 25; ++i) e->solve(c4(), {}, i);
    });
  }
  pool.clear();
  CHECK(counter->value() == 100);
}

TEST_CASE("split_seed is fixed and distinguishes indices") {
  CHECK(split_seed(0, 0) != split_seed(0, 1));
  CHECK(split_seed(1, 0) != split_seed(0, 0));
  CHECK(split_seed(42, 7) == split_seed(42, 7));
}
