#include "support/corpus.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace pdcut::testing {

namespace {

constexpr int kMaxShapeVertices = 8;

// Adjacency as one bitmask row per vertex (0-based).
using Rows = std::array<std::uint8_t, kMaxShapeVertices>;

std::uint32_t encode(const Rows& rows, int n, const std::array<int, 8>& order) {
  // order[i] = original vertex placed at position i
  std::uint32_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      code = (code << 1) | ((rows[order[i]] >> order[j]) & 1u);
    }
  }
  return code;
}

// Colour refinement followed by a minimum over all cell-respecting
// orderings. Refined colours are isomorphism invariants, so isomorphic
// graphs get the same code.
std::uint32_t canonical_code(const Rows& rows, int n) {
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(rows[v]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int u = 0; u < n; ++u) {
        if ((rows[v] >> u) & 1u) sig[v].second.push_back(color[u]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }

  // cells in colour order; permute within each cell
  std::array<int, 8> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = 0xffffffffu;
  // odometer over per-cell permutations
  for (;;) {
    best = std::min(best, encode(rows, n, order));
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      // wrapped to sorted order; carry into the next cell
    }
    if (c == cells.size()) break;
  }
  return best;
}

bool connected(const Rows& rows, int n) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1u) next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

std::vector<std::vector<Rows>> build_all_graphs() {
  std::vector<std::vector<Rows>> all(kMaxShapeVertices + 1);
  all[1].push_back(Rows{});
  for (int n = 2; n <= kMaxShapeVertices; ++n) {
    std::unordered_set<std::uint32_t> seen;
    for (const Rows& base : all[n - 1]) {
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        Rows rows = base;
        rows[n - 1] = static_cast<std::uint8_t>(nb);
        for (int u = 0; u < n - 1; ++u) {
          if ((nb >> u) & 1u) rows[u] |= static_cast<std::uint8_t>(1u << (n - 1));
        }
        if (seen.insert(canonical_code(rows, n)).second) all[n].push_back(rows);
      }
    }
  }
  return all;
}

}  // namespace

const std::vector<Shape>& connected_shapes(Vertex n) {
  static const std::vector<std::vector<Shape>> shapes = [] {
    const auto all = build_all_graphs();
    std::vector<std::vector<Shape>> out(kMaxShapeVertices + 1);
    for (int n = 1; n <= kMaxShapeVertices; ++n) {
      for (const Rows& rows : all[n]) {
        if (!connected(rows, n)) continue;
        Shape s;
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if ((rows[u] >> v) & 1u) s.emplace_back(u + 1, v + 1);
          }
        }
        out[n].push_back(std::move(s));
      }
    }
    return out;
  }();
  if (n < 1 || n > kMaxShapeVertices) {
    throw std::invalid_argument("connected_shapes: n must be in 1..8");
  }
  return shapes[n];
}

std::vector<WeightedGraph> exhaustive_corpus(Vertex max_n, unsigned draws,
                                             Weight max_weight,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::vector<WeightedGraph> out;
  for (Vertex n = 2; n <= max_n; ++n) {
    for (const Shape& shape : connected_shapes(n)) {
      for (unsigned d = 0; d < draws; ++d) {
        std::vector<Edge> edges;
        for (auto [u, v] : shape) edges.push_back(Edge{u, v, weight(rng)});
        out.push_back(WeightedGraph::create(n, std::move(edges)));
      }
    }
  }
  return out;
}

WeightedGraph random_graph(std::mt19937_64& rng, Vertex n, std::size_t m,
                           Weight max_weight, bool connected_graph) {
  const std::size_t max_edges = std::size_t(n) * (n - 1) / 2;
  m = std::min(m, max_edges);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::set<std::pair<Vertex, Vertex>> chosen;
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    if (a == b || !chosen.emplace(a, b).second) return;
    edges.push_back(Edge{a, b, weight(rng)});
  };
  if (connected_graph) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex i = 1; i < n; ++i) {
      std::uniform_int_distribution<Vertex> pick(0, i - 1);
      add(perm[i], perm[pick(rng)]);
    }
  }
  std::uniform_int_distribution<Vertex> vertex(1, n);
  while (edges.size() < m) add(vertex(rng), vertex(rng));
  std::shuffle(edges.begin(), edges.end(), rng);
  return WeightedGraph::create(n, std::move(edges));
}

WeightedGraph random_graph_in(std::mt19937_64& rng, Vertex min_n, Vertex max_n,
                              std::size_t max_m, Weight max_weight) {
  const Vertex n = std::uniform_int_distribution<Vertex>(min_n, max_n)(rng);
  const std::size_t hi =
      std::max<std::size_t>(n - 1, std::min(max_m, std::size_t(n) * (n - 1) / 2));
  const std::size_t m = std::uniform_int_distribution<std::size_t>(n - 1, hi)(rng);
  const bool connected_graph = std::bernoulli_distribution(0.9)(rng);
  return random_graph(rng, n, m, max_weight, connected_graph);
}

}  // namespace pdcut::testing
