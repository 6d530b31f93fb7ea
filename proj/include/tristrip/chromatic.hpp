#pragma once

#include <cstdint>
#include <memory>

#include "tristrip/graph.hpp"
#include "tristrip/polynomial.hpp"

namespace tristrip {

enum class EdgeOrder {
  // Edge at a minimum-degree vertex towards the neighbour sharing the most
  // common neighbours with it.
  densest_first,
  // Lexicographically first / last edge of the current graph.
  first_edge,
  last_edge,
};

struct EngineOptions {
  std::uint64_t node_budget = 100'000'000;
  std::size_t cache_entries = 1'000'000;
  bool use_cache = true;
  EdgeOrder edge_order = EdgeOrder::densest_first;
};

struct EngineStats {
  std::uint64_t nodes = 0;
  std::uint64_t cache_hits = 0;
  std::size_t cache_size = 0;
};

// Deletion-contraction chromatic polynomial engine for graphs with at most 64
// vertices. Simplicial vertices are peeled as linear factors and disconnected
// graphs split into components before any branching. The memo table is
// private to the instance, so separate instances may run concurrently; one
// instance must not be shared between threads.
class ChromaticEngine {
 public:
  explicit ChromaticEngine(EngineOptions options = {});
  ~ChromaticEngine();
  ChromaticEngine(ChromaticEngine&&) noexcept;
  ChromaticEngine& operator=(ChromaticEngine&&) noexcept;

  // Throws ResourceLimitError when the node budget is exhausted.
  IntPolynomial operator()(const Graph& g);
  const EngineStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

IntPolynomial chromatic_polynomial(const Graph& g, const EngineOptions& options = {});

}  // namespace tristrip
