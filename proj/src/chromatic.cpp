#include "tristrip/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "tristrip/errors.hpp"

namespace tristrip {

namespace {

using Mask = std::uint64_t;
using Adjacency = std::vector<Mask>;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Drops vertex v and renumbers the vertices above it down by one.
Adjacency remove_vertex(const Adjacency& adj, int v) {
  const Mask low = bit(v) - 1;
  Adjacency out;
  out.reserve(adj.size() - 1);
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    if (u == v) continue;
    Mask m = adj[u] & ~bit(v);
    out.push_back((m & low) | ((m >> 1) & ~low));
  }
  return out;
}

bool is_clique(const Adjacency& adj, Mask set) {
  for (Mask s = set; s; s &= s - 1) {
    int u = std::countr_zero(s);
    if ((adj[u] & set) != (set & ~bit(u))) return false;
  }
  return true;
}

Adjacency induced(const Adjacency& adj, Mask keep) {
  std::vector<int> index(adj.size(), -1);
  int next = 0;
  for (Mask s = keep; s; s &= s - 1) index[std::countr_zero(s)] = next++;
  Adjacency out(static_cast<std::size_t>(next), 0);
  for (Mask s = keep; s; s &= s - 1) {
    int u = std::countr_zero(s);
    Mask m = adj[u] & keep;
    Mask r = 0;
    for (; m; m &= m - 1) r |= bit(index[std::countr_zero(m)]);
    out[index[u]] = r;
  }
  return out;
}

struct KeyHash {
  std::size_t operator()(const Adjacency& a) const noexcept {
    std::size_t h = a.size() * 0x9e3779b97f4a7c15ULL;
    for (Mask m : a) h = (h ^ (m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2))) * 0xff51afd7ed558ccdULL;
    return h;
  }
};

// Relabels by (degree, neighbour-degree signature). Not a canonical form;
// equal keys still imply isomorphic graphs because the key is the relabeled
// adjacency itself.
Adjacency cache_key(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::uint64_t> deg(static_cast<std::size_t>(n)), sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = static_cast<std::uint64_t>(std::popcount(adj[v]));
  for (int v = 0; v < n; ++v) {
    std::uint64_t s = 0;
    for (Mask m = adj[v]; m; m &= m - 1) {
      std::uint64_t d = deg[std::countr_zero(m)];
      s += d * d * d + 7 * d;
    }
    sig[v] = s;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] < deg[b];
    return sig[a] < sig[b];
  });
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  Adjacency key(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Mask r = 0;
    for (Mask m = adj[order[i]]; m; m &= m - 1) r |= bit(pos[std::countr_zero(m)]);
    key[i] = r;
  }
  return key;
}

}  // namespace

struct ChromaticEngine::Impl {
  EngineOptions options;
  EngineStats stats;
  std::unordered_map<Adjacency, IntPolynomial, KeyHash> cache;

  IntPolynomial solve(Adjacency adj);
  IntPolynomial branch(const Adjacency& adj);
  std::pair<int, int> pick_edge(const Adjacency& adj) const;
};

std::pair<int, int> ChromaticEngine::Impl::pick_edge(const Adjacency& adj) const {
  const int n = static_cast<int>(adj.size());
  switch (options.edge_order) {
    case EdgeOrder::first_edge:
      for (int u = 0; u < n; ++u) {
        Mask above = adj[u] & ~((bit(u) << 1) - 1);
        if (above) return {u, std::countr_zero(above)};
      }
      break;
    case EdgeOrder::last_edge:
      for (int u = n; u-- > 0;) {
        Mask below = adj[u] & (bit(u) - 1);
        if (below) return {63 - std::countl_zero(below), u};
      }
      break;
    case EdgeOrder::densest_first: {
      int v = -1;
      int best = 65;
      for (int u = 0; u < n; ++u) {
        int d = std::popcount(adj[u]);
        if (d > 0 && d < best) {
          best = d;
          v = u;
        }
      }
      int w = -1;
      int shared = -1;
      for (Mask m = adj[v]; m; m &= m - 1) {
        int u = std::countr_zero(m);
        int c = std::popcount(adj[u] & adj[v]);
        if (c > shared) {
          shared = c;
          w = u;
        }
      }
      return {v, w};
    }
  }
  throw std::logic_error("pick_edge on an edgeless graph");
}

IntPolynomial ChromaticEngine::Impl::branch(const Adjacency& adj) {
  auto [u, v] = pick_edge(adj);
  Adjacency deleted = adj;
  deleted[u] &= ~bit(v);
  deleted[v] &= ~bit(u);

  // merge v into u
  Adjacency merged = deleted;
  merged[u] |= merged[v];
  for (Mask m = merged[v]; m; m &= m - 1) merged[std::countr_zero(m)] |= bit(u);
  merged = remove_vertex(merged, v);

  IntPolynomial result = solve(std::move(deleted));
  result -= solve(std::move(merged));
  return result;
}

IntPolynomial ChromaticEngine::Impl::solve(Adjacency adj) {
  if (++stats.nodes > options.node_budget) {
    throw ResourceLimitError("chromatic engine node budget of " + std::to_string(options.node_budget) + " exhausted");
  }
  IntPolynomial factor = IntPolynomial::constant(1);

  // peel simplicial vertices: P(G) = (x - deg v) P(G - v)
  for (bool peeled = true; peeled && !adj.empty();) {
    peeled = false;
    for (int v = static_cast<int>(adj.size()); v-- > 0;) {
      if (is_clique(adj, adj[v])) {
        factor *= IntPolynomial::linear_root(std::popcount(adj[v]));
        adj = remove_vertex(adj, v);
        peeled = true;
        break;
      }
    }
  }
  if (adj.empty()) return factor;

  // components
  const int n = static_cast<int>(adj.size());
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  Mask seen = bit(0);
  for (Mask frontier = bit(0); frontier;) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != all) {
    factor *= solve(induced(adj, seen));
    factor *= solve(induced(adj, all & ~seen));
    return factor;
  }

  if (!options.use_cache) return factor * branch(adj);

  Adjacency key = cache_key(adj);
  if (auto it = cache.find(key); it != cache.end()) {
    ++stats.cache_hits;
    return factor * it->second;
  }
  IntPolynomial body = branch(adj);
  if (cache.size() < options.cache_entries) {
    cache.emplace(std::move(key), body);
    stats.cache_size = cache.size();
  }
  return factor * body;
}

ChromaticEngine::ChromaticEngine(EngineOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
}
ChromaticEngine::~ChromaticEngine() = default;
ChromaticEngine::ChromaticEngine(ChromaticEngine&&) noexcept = default;
ChromaticEngine& ChromaticEngine::operator=(ChromaticEngine&&) noexcept = default;

const EngineStats& ChromaticEngine::stats() const { return impl_->stats; }

IntPolynomial ChromaticEngine::operator()(const Graph& g) {
  if (g.vertex_count() > 64) throw ResourceLimitError("chromatic engine supports at most 64 vertices");
  if (g.vertex_count() == 0) return IntPolynomial::constant(1);
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return impl_->solve(std::move(adj));
}

IntPolynomial chromatic_polynomial(const Graph& g, const EngineOptions& options) {
  ChromaticEngine engine(options);
  return engine(g);
}

}  // namespace tristrip
