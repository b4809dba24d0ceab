#include "flat_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace pdcut::detail {

void FlatGraph::add(std::uint32_t u, std::uint32_t v, Wide w) {
  if (w == 0) return;
  edges.push_back(FlatEdge{u, v, w});
  total = checked_add(total, w);
}

FlatGraph flatten_graph(const WeightedGraph& g, const LayeredWeightFn& wf) {
  wf.validate_bounds(g);
  wf.checked_total(g);
  FlatGraph out;
  out.n = g.vertex_count();
  out.edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    out.add(e.u - 1, e.v - 1, wf.flatten(wf.edge_value(e)));
  }
  return out;
}

Wide flat_cut_value(const FlatGraph& g, const std::vector<char>& side) {
  Wide total = 0;
  for (const FlatEdge& e : g.edges) {
    if (side[e.u] != side[e.v]) total += e.w;
  }
  return total;
}

VertexSet to_vertex_set(const std::vector<char>& side) {
  VertexSet out;
  for (std::uint32_t i = 0; i < side.size(); ++i) {
    if (side[i]) out.push_back(i + 1);
  }
  return out;
}

namespace {

// Flattened sums stay below 2^63 when the whole graph does, so the cores can
// run on 64-bit words; larger inputs use the 128-bit path.
bool fits_narrow(const FlatGraph& g) {
  return g.total <= std::numeric_limits<std::uint64_t>::max() / 2;
}

template <class W>
W uniform_below(std::mt19937_64& rng, W bound) {
  // Rejection sampling: uniform on [0, bound) with a platform-independent
  // sequence for a given seed.
  const W threshold = static_cast<W>(W(0) - bound) % bound;
  for (;;) {
    W x;
    if constexpr (sizeof(W) > sizeof(std::uint64_t)) {
      x = (static_cast<W>(rng()) << 64) | static_cast<W>(rng());
    } else {
      x = rng();
    }
    if (x >= threshold) return x % bound;
  }
}

// ---------------------------------------------------------------- Stoer-Wagner

template <class W>
FlatCut stoer_wagner_impl(const FlatGraph& g) {
  const std::uint32_t n = g.n;
  std::vector<std::vector<std::pair<std::uint32_t, W>>> adj(n);
  for (const FlatEdge& e : g.edges) {
    adj[e.u].emplace_back(e.v, static_cast<W>(e.w));
    adj[e.v].emplace_back(e.u, static_cast<W>(e.w));
  }
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::vector<std::uint32_t>> members(n);
  for (std::uint32_t i = 0; i < n; ++i) members[i] = {i};
  std::vector<std::uint32_t> active(n);
  std::iota(active.begin(), active.end(), 0u);

  W best = std::numeric_limits<W>::max();
  std::vector<std::uint32_t> best_members;
  bool have_best = false;

  std::vector<W> key(n, 0);
  std::vector<char> added(n, 0);
  using Item = std::pair<W, std::uint32_t>;
  // Max-heap on key; equal keys pop the smaller id first.
  auto lower_priority = [](const Item& a, const Item& b) {
    return a.first < b.first || (a.first == b.first && a.second > b.second);
  };

  while (active.size() > 1) {
    std::priority_queue<Item, std::vector<Item>, decltype(lower_priority)> pq(
        lower_priority);
    for (std::uint32_t a : active) {
      key[a] = 0;
      added[a] = 0;
      pq.emplace(0, a);
    }
    std::uint32_t prev = n, last = n;
    W last_key = 0;
    std::size_t count = 0;
    while (count < active.size()) {
      auto [k, u] = pq.top();
      pq.pop();
      if (added[u] || k != key[u]) continue;
      added[u] = 1;
      ++count;
      prev = last;
      last = u;
      last_key = k;
      for (auto [x, w] : adj[u]) {
        x = find(x);
        if (x == u || added[x]) continue;
        key[x] += w;
        pq.emplace(key[x], x);
      }
    }
    if (!have_best || last_key < best) {
      best = last_key;
      best_members = members[last];
      have_best = true;
    }
    // Merge `last` into `prev`.
    parent[last] = prev;
    if (adj[prev].size() < adj[last].size()) std::swap(adj[prev], adj[last]);
    adj[prev].insert(adj[prev].end(), adj[last].begin(), adj[last].end());
    adj[last].clear();
    adj[last].shrink_to_fit();
    if (members[prev].size() < members[last].size()) {
      std::swap(members[prev], members[last]);
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    members[last].clear();
    active.erase(std::find(active.begin(), active.end(), last));
  }

  FlatCut out;
  out.side.assign(n, 0);
  for (std::uint32_t v : best_members) out.side[v] = 1;
  out.value = best;
  return out;
}

// ---------------------------------------------------------------- Karger-Stein

template <class W>
struct Dense {
  std::uint32_t k = 0;
  std::vector<W> a;  // row-major k*k
  std::vector<W> deg;

  W& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * k + j]; }
  W at(std::uint32_t i, std::uint32_t j) const {
    return a[std::size_t(i) * k + j];
  }
};

constexpr std::uint32_t kLeafSize = 12;
constexpr std::uint32_t kMaxDenseVertices = 4096;

template <class W>
class KargerStein {
 public:
  explicit KargerStein(std::uint64_t seed) : rng_(seed) {}

  // Best cut found by one recursive run; side[i] says whether slot i is on
  // the side of slot 0.
  W recurse(const Dense<W>& g, std::vector<char>& side) {
    W total2 = 0;
    for (W d : g.deg) total2 += d;
    if (total2 == 0) {
      side.assign(g.k, 0);
      side[0] = 1;
      return 0;
    }
    if (g.k <= kLeafSize) return leaf(g, side);

    const auto target = static_cast<std::uint32_t>(
        std::ceil(1.0 + g.k / std::sqrt(2.0)));
    W best = std::numeric_limits<W>::max();
    std::vector<std::uint32_t> map;
    std::vector<char> sub;
    for (int branch = 0; branch < 2; ++branch) {
      Dense<W> h = contract(g, target, map);
      W value = recurse(h, sub);
      if (value < best) {
        best = value;
        side.resize(g.k);
        for (std::uint32_t i = 0; i < g.k; ++i) side[i] = sub[map[i]];
      }
    }
    if (!side[0]) {
      for (auto& c : side) c = !c;
    }
    return best;
  }

 private:
  // Exact minimum cut of a small contracted graph (dense Stoer-Wagner).
  W leaf(const Dense<W>& g, std::vector<char>& side) {
    const std::uint32_t k = g.k;
    std::vector<W> a(g.a);
    std::vector<std::uint32_t> alive(k);
    std::iota(alive.begin(), alive.end(), 0u);
    std::vector<std::uint32_t> group(k);
    std::iota(group.begin(), group.end(), 0u);
    std::vector<W> key(k);
    std::vector<char> added(k);
    W best = std::numeric_limits<W>::max();
    std::uint32_t best_last = 0;
    std::vector<std::uint32_t> best_group;
    while (alive.size() > 1) {
      std::fill(added.begin(), added.end(), 0);
      for (std::uint32_t x : alive) key[x] = 0;
      std::uint32_t prev = alive[0], last = alive[0];
      for (std::size_t step = 0; step < alive.size(); ++step) {
        std::uint32_t pick = k;
        for (std::uint32_t x : alive) {
          if (!added[x] && (pick == k || key[x] > key[pick])) pick = x;
        }
        added[pick] = 1;
        prev = last;
        last = pick;
        for (std::uint32_t x : alive) {
          if (!added[x]) key[x] += a[std::size_t(pick) * k + x];
        }
      }
      if (key[last] < best) {
        best = key[last];
        best_last = last;
        best_group = group;
      }
      for (std::uint32_t x : alive) {
        if (x == prev || x == last) continue;
        a[std::size_t(prev) * k + x] += a[std::size_t(last) * k + x];
        a[std::size_t(x) * k + prev] = a[std::size_t(prev) * k + x];
      }
      for (auto& r : group) {
        if (r == last) r = prev;
      }
      alive.erase(std::find(alive.begin(), alive.end(), last));
    }
    side.assign(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) side[i] = best_group[i] == best_last;
    if (!side[0]) {
      for (auto& c : side) c = !c;
    }
    return best;
  }

  Dense<W> contract(const Dense<W>& g, std::uint32_t target,
                    std::vector<std::uint32_t>& map) {
    const std::uint32_t k = g.k;
    Dense<W> w = g;
    std::vector<std::uint32_t> alive(k);
    std::iota(alive.begin(), alive.end(), 0u);
    std::vector<std::uint32_t> pos(alive);
    std::vector<std::uint32_t> parent(alive);
    W total2 = 0;
    for (W d : w.deg) total2 += d;

    while (alive.size() > target && total2 > 0) {
      W r = uniform_below(rng_, total2);
      std::uint32_t u = alive.back();
      for (std::uint32_t x : alive) {
        if (r < w.deg[x]) {
          u = x;
          break;
        }
        r -= w.deg[x];
      }
      W r2 = uniform_below(rng_, w.deg[u]);
      std::uint32_t v = u;
      for (std::uint32_t x : alive) {
        if (x == u) continue;
        const W wx = w.at(u, x);
        if (r2 < wx) {
          v = x;
          break;
        }
        r2 -= wx;
      }
      const W uv = w.at(u, v);
      for (std::uint32_t x : alive) {
        if (x == u || x == v) continue;
        const W merged = w.at(u, x) + w.at(v, x);
        w.at(u, x) = merged;
        w.at(x, u) = merged;
      }
      w.at(u, v) = 0;
      w.at(v, u) = 0;
      w.deg[u] = w.deg[u] + w.deg[v] - 2 * uv;
      total2 -= 2 * uv;
      parent[v] = u;
      // swap-remove v from alive
      const std::uint32_t pv = pos[v];
      alive[pv] = alive.back();
      pos[alive[pv]] = pv;
      alive.pop_back();
    }

    std::sort(alive.begin(), alive.end());
    const auto kk = static_cast<std::uint32_t>(alive.size());
    std::vector<std::uint32_t> index(k, 0);
    for (std::uint32_t j = 0; j < kk; ++j) index[alive[j]] = j;
    map.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t r = i;
      while (parent[r] != r) r = parent[r];
      map[i] = index[r];
    }
    Dense<W> h;
    h.k = kk;
    h.a.assign(std::size_t(kk) * kk, 0);
    h.deg.resize(kk);
    for (std::uint32_t i = 0; i < kk; ++i) {
      h.deg[i] = w.deg[alive[i]];
      for (std::uint32_t j = 0; j < kk; ++j) {
        h.at(i, j) = w.at(alive[i], alive[j]);
      }
    }
    return h;
  }

  std::mt19937_64 rng_;
};

template <class W>
FlatCut karger_stein_impl(const FlatGraph& g, std::uint64_t seed,
                          unsigned repetitions) {
  Dense<W> dense;
  dense.k = g.n;
  dense.a.assign(std::size_t(g.n) * g.n, 0);
  dense.deg.assign(g.n, 0);
  for (const FlatEdge& e : g.edges) {
    const auto w = static_cast<W>(e.w);
    dense.at(e.u, e.v) += w;
    dense.at(e.v, e.u) += w;
    dense.deg[e.u] += w;
    dense.deg[e.v] += w;
  }
  KargerStein<W> ks(seed);
  FlatCut out;
  W best = std::numeric_limits<W>::max();
  std::vector<char> side;
  for (unsigned rep = 0; rep < std::max(1u, repetitions); ++rep) {
    W value = ks.recurse(dense, side);
    if (value < best) {
      best = value;
      out.side = side;
    }
  }
  out.value = best;
  return out;
}

// ----------------------------------------------------- shortest augmenting path

template <class W>
FlatCut st_flow_impl(const FlatGraph& g, std::uint32_t s, std::uint32_t t) {
  struct Arc {
    std::uint32_t to;
    W residual;
  };
  const std::uint32_t n = g.n;
  std::vector<Arc> arcs;
  arcs.reserve(g.edges.size() * 2);
  std::vector<std::vector<std::uint32_t>> out(n);
  for (const FlatEdge& e : g.edges) {
    // An undirected edge is a pair of opposite arcs, each the other's
    // reverse (index i ^ 1).
    out[e.u].push_back(static_cast<std::uint32_t>(arcs.size()));
    arcs.push_back({e.v, static_cast<W>(e.w)});
    out[e.v].push_back(static_cast<std::uint32_t>(arcs.size()));
    arcs.push_back({e.u, static_cast<W>(e.w)});
  }

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> via(n);
  W flow = 0;
  for (;;) {
    std::fill(via.begin(), via.end(), kNone);
    std::queue<std::uint32_t> q;
    q.push(s);
    via[s] = kNone - 1;
    while (!q.empty() && via[t] == kNone) {
      const std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t a : out[u]) {
        const Arc& arc = arcs[a];
        if (arc.residual > 0 && via[arc.to] == kNone) {
          via[arc.to] = a;
          q.push(arc.to);
        }
      }
    }
    if (via[t] == kNone) break;
    W bottleneck = std::numeric_limits<W>::max();
    for (std::uint32_t v = t; v != s; v = arcs[via[v] ^ 1u].to) {
      bottleneck = std::min(bottleneck, arcs[via[v]].residual);
    }
    for (std::uint32_t v = t; v != s; v = arcs[via[v] ^ 1u].to) {
      arcs[via[v]].residual -= bottleneck;
      arcs[via[v] ^ 1u].residual += bottleneck;
    }
    flow += bottleneck;
  }

  FlatCut cut;
  cut.side.assign(n, 0);
  std::queue<std::uint32_t> q;
  q.push(s);
  cut.side[s] = 1;
  while (!q.empty()) {
    const std::uint32_t u = q.front();
    q.pop();
    for (std::uint32_t a : out[u]) {
      if (arcs[a].residual > 0 && !cut.side[arcs[a].to]) {
        cut.side[arcs[a].to] = 1;
        q.push(arcs[a].to);
      }
    }
  }
  cut.value = flow;
  return cut;
}

}  // namespace

FlatCut stoer_wagner_core(const FlatGraph& g) {
  if (g.n < 2) throw std::invalid_argument("stoer_wagner: n < 2");
  return fits_narrow(g) ? stoer_wagner_impl<std::uint64_t>(g)
                        : stoer_wagner_impl<Wide>(g);
}

FlatCut karger_stein_core(const FlatGraph& g, std::uint64_t seed,
                          unsigned repetitions) {
  if (g.n < 2) throw std::invalid_argument("karger_stein: n < 2");
  if (g.n > kMaxDenseVertices) {
    throw std::invalid_argument("karger_stein: more than " +
                                std::to_string(kMaxDenseVertices) +
                                " vertices");
  }
  return fits_narrow(g) ? karger_stein_impl<std::uint64_t>(g, seed, repetitions)
                        : karger_stein_impl<Wide>(g, seed, repetitions);
}

FlatCut st_flow_core(const FlatGraph& g, std::uint32_t s, std::uint32_t t) {
  if (s == t) throw std::invalid_argument("st_flow: s == t");
  if (s >= g.n || t >= g.n) throw std::invalid_argument("st_flow: bad terminal");
  return fits_narrow(g) ? st_flow_impl<std::uint64_t>(g, s, t)
                        : st_flow_impl<Wide>(g, s, t);
}

}  // namespace pdcut::detail
