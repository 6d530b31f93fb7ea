#include <queue>

#include "kernels_detail.hpp"
#include "tristrip/errors.hpp"

namespace tristrip::kernels {

namespace detail {

ColouringEnumerator::ColouringEnumerator(const Graph& g, int x, Bucketing mode, Frame rows, Frame cols)
    : n_(g.vertex_count()), x_(x), mode_(mode), rows_(rows), cols_(cols) {
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n_));
  for (auto [u, v] : g.edges()) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  std::vector<bool> placed(static_cast<std::size_t>(n_), false);
  for (int s = 0; s < n_; ++s) {
    if (placed[s]) continue;
    std::queue<int> q;
    q.push(s);
    placed[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order_.push_back(v);
      for (int w : nb[v]) {
        if (!placed[w]) {
          placed[w] = true;
          q.push(w);
        }
      }
    }
  }
  std::vector<int> pos(static_cast<std::size_t>(n_));
  for (int d = 0; d < n_; ++d) pos[order_[d]] = d;
  earlier_.resize(static_cast<std::size_t>(n_));
  for (int d = 0; d < n_; ++d) {
    for (int w : nb[order_[d]]) {
      if (pos[w] < d) earlier_[d].push_back(w);
    }
  }
}

bool ColouringEnumerator::fits(int depth, int colour, const std::vector<int>& colours) const {
  for (int w : earlier_[depth]) {
    if (colours[w] == colour) return false;
  }
  return true;
}

int ColouringEnumerator::bucket(const std::vector<int>& c) const {
  switch (mode_) {
    case Bucketing::none: return 0;
    case Bucketing::one_frame:
      return type_index(colouring_type(c[rows_[0]], c[rows_[1]], c[rows_[2]], c[rows_[3]]));
    case Bucketing::two_frames:
      return 4 * type_index(colouring_type(c[rows_[0]], c[rows_[1]], c[rows_[2]], c[rows_[3]])) +
             type_index(colouring_type(c[cols_[0]], c[cols_[1]], c[cols_[2]], c[cols_[3]]));
  }
  return 0;
}

void ColouringEnumerator::recurse(int depth, std::vector<int>& colours, Buckets& out) const {
  if (depth == n_) {
    ++out[static_cast<std::size_t>(bucket(colours))];
    return;
  }
  const int v = order_[depth];
  for (int c = 0; c < x_; ++c) {
    if (!fits(depth, c, colours)) continue;
    colours[v] = c;
    recurse(depth + 1, colours, out);
  }
  colours[v] = -1;
}

std::vector<std::vector<int>> ColouringEnumerator::prefixes(int depth) const {
  std::vector<std::vector<int>> out;
  std::vector<int> colours(static_cast<std::size_t>(n_), -1);
  std::vector<int> current;
  auto walk = [&](auto&& self, int d) -> void {
    if (d == depth) {
      out.push_back(current);
      return;
    }
    const int v = order_[d];
    for (int c = 0; c < x_; ++c) {
      if (!fits(d, c, colours)) continue;
      colours[v] = c;
      current.push_back(c);
      self(self, d + 1);
      current.pop_back();
    }
    colours[v] = -1;
  };
  walk(walk, 0);
  return out;
}

void ColouringEnumerator::complete(const std::vector<int>& prefix, Buckets& out) const {
  std::vector<int> colours(static_cast<std::size_t>(n_), -1);
  for (std::size_t d = 0; d < prefix.size(); ++d) colours[order_[d]] = prefix[d];
  recurse(static_cast<int>(prefix.size()), colours, out);
}

void check_bounds(const Graph& g, int x) {
  if (x < 0) throw std::invalid_argument("negative colour count");
  if (g.vertex_count() > 12 || x > 12) {
    throw ResourceLimitError("brute-force enumeration limited to 12 vertices and 12 colours");
  }
}

}  // namespace detail

namespace serial {

using detail::Bucketing;
using detail::Buckets;
using detail::ColouringEnumerator;

Count count_colourings(const Graph& g, int x) {
  ColouringEnumerator e(g, x, Bucketing::none);
  Buckets b{};
  e.complete({}, b);
  return b[0];
}

TypeCounts count_by_type(const Graph& g, const Frame& frame, int x) {
  ColouringEnumerator e(g, x, Bucketing::one_frame, frame);
  Buckets b{};
  e.complete({}, b);
  return {b[0], b[1], b[2], b[3]};
}

TypeMatrix count_by_two_frames(const Graph& g, const Frame& rows, const Frame& cols, int x) {
  ColouringEnumerator e(g, x, Bucketing::two_frames, rows, cols);
  Buckets b{};
  e.complete({}, b);
  TypeMatrix m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = b[static_cast<std::size_t>(4 * i + j)];
  }
  return m;
}

std::vector<int> sign_sweep(std::span<const Rational> points, const SignProbe& probe) {
  std::vector<int> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(probe(p));
  return out;
}

}  // namespace serial

}  // namespace tristrip::kernels

namespace tristrip {

std::uint64_t count_colourings_oracle(const Graph& g, int x) {
  kernels::detail::check_bounds(g, x);
  return kernels::parallel::count_colourings(g, x);
}

}  // namespace tristrip
