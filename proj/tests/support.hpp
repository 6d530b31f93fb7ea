#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "tristrip/graph.hpp"
#include "tristrip/partition.hpp"

namespace testing {

inline tristrip::FramedGraph fixture(const std::string& name, std::size_t frame = 0) {
  return tristrip::load_graph_file(std::string(TRISTRIP_FIXTURE_DIR) + "/" + name + ".graph").framed(frame);
}

// Q(H) takes a few hundredths of a second; the rest are instant. Cached anyway
// because many tests share them.
inline const tristrip::PartitionVector& q_of(const std::string& name) {
  static std::map<std::string, tristrip::PartitionVector> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, tristrip::partitioned_chromatic(fixture(name))).first;
  return it->second;
}

inline tristrip::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  tristrip::Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Same graph with vertex v renamed perm[v].
inline tristrip::Graph relabel(const tristrip::Graph& g, const std::vector<int>& perm) {
  tristrip::Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

// Random relabelling that keeps the frame's vertices as a set but moves them
// and every other vertex around.
inline tristrip::FramedGraph shuffle_framed(const tristrip::FramedGraph& fg, std::mt19937_64& rng) {
  std::vector<int> perm(fg.graph.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  tristrip::FramedGraph out{relabel(fg.graph, perm), {}};
  for (int i = 0; i < 4; ++i) out.frame[i] = perm[fg.frame[i]];
  return out;
}

}  // namespace testing
