#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tristrip/graph.hpp"
#include "tristrip/kernels.hpp"

namespace tristrip::kernels::detail {

using Buckets = std::array<Count, 16>;

enum class Bucketing { none, one_frame, two_frames };

// Backtracking enumerator over proper colourings. Vertices are coloured in a
// BFS order so that adjacency constraints prune early.
class ColouringEnumerator {
 public:
  ColouringEnumerator(const Graph& g, int x, Bucketing mode, Frame rows = {}, Frame cols = {});

  int vertex_count() const { return n_; }
  // All proper colourings of the first `depth` vertices in the order.
  std::vector<std::vector<int>> prefixes(int depth) const;
  // Completes `prefix` (colours of the first prefix.size() vertices in order).
  void complete(const std::vector<int>& prefix, Buckets& out) const;

 private:
  int bucket(const std::vector<int>& colours) const;
  void recurse(int depth, std::vector<int>& colours, Buckets& out) const;
  bool fits(int depth, int colour, const std::vector<int>& colours) const;

  int n_;
  int x_;
  Bucketing mode_;
  Frame rows_;
  Frame cols_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;  // earlier_[d]: neighbours of order_[d] placed before it
};

void check_bounds(const Graph& g, int x);

}  // namespace tristrip::kernels::detail
