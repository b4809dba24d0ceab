#include <doctest.h>

#include <map>
#include <random>

#include "pdcut/pseudodet.hpp"
#include "pdcut/replicate.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace pdcut;
using namespace pdcut::testing;

namespace {

unsigned total(const ReplicationReport& r) {
  unsigned sum = r.failures;
  for (const auto& o : r.outputs) sum += o.count;
  return sum;
}

}  // namespace

TEST_CASE("exact engines replicate perfectly") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    auto g = random_graph_in(rng, 2, 15, 40, 3);
    auto rep = replicate(g, make_stoer_wagner_engine(), 25, rng());
    CHECK(rep.runs == 25);
    CHECK(rep.distinct_outputs() == 1);
    CHECK(rep.agreement() == 1.0);
    CHECK(rep.failures == 0);
    CHECK(rep.outputs.front().side == canonical_cut_oracle(g).side);
  }
}

TEST_CASE("one karger trial on C4 is reported consistently") {
  auto rep = replicate(c4(), make_karger_stein_engine(), 100, 0);
  CHECK(total(rep) == 100);
  CHECK(rep.engine_calls.size() == 100);
  for (std::size_t i = 1; i < rep.outputs.size(); ++i) {
    CHECK(rep.outputs[i - 1].count >= rep.outputs[i].count);
  }
}

TEST_CASE("replicate uses seeds seed_base+1..seed_base+runs") {
  auto e = amplify(make_karger_stein_engine(), 2);
  const auto g = c4();
  auto rep = replicate(g, e, 5, 40);
  std::map<VertexSet, unsigned> expect;
  for (std::uint64_t s = 41; s <= 45; ++s) {
    try {
      ++expect[pd_global_cut(g, e, s).side];
    } catch (const RandomnessFailure&) {
    }
  }
  unsigned matched = 0;
  for (const auto& o : rep.outputs) {
    CHECK(expect[o.side] == o.count);
    matched += o.count;
  }
  CHECK(matched + rep.failures == 5);
}

TEST_CASE("threaded replication is order-deterministic") {
  std::mt19937_64 rng(2);
  auto g = random_graph_in(rng, 10, 20, 50, 2);
  auto e = amplify(make_karger_stein_engine(), 2);
  auto a = replicate(g, e, 40, 7, 1);
  auto b = replicate(g, e, 40, 7, 4);
  CHECK(a.failures == b.failures);
  CHECK(a.engine_calls == b.engine_calls);
  REQUIRE(a.outputs.size() == b.outputs.size());
  for (std::size_t i = 0; i < a.outputs.size(); ++i) {
    CHECK(a.outputs[i].side == b.outputs[i].side);
    CHECK(a.outputs[i].count == b.outputs[i].count);
  }
}

TEST_CASE("amplified karger replicates on small random graphs") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    auto g = random_graph_in(rng, 5, 20, 40, 3);
    const auto r = default_amplification(2.0 / 3.0, g.vertex_count());
    auto rep = replicate(g, amplify(make_karger_stein_engine(), r), 30, rng());
    CHECK(rep.modal_count() >= 29);
    CHECK(rep.outputs.front().side == canonical_cut_oracle(g).side);
  }
}
