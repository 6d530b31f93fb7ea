#include <omp.h>

#include <exception>

#include "kernels_detail.hpp"

namespace tristrip::kernels::parallel {

namespace {

using detail::Bucketing;
using detail::Buckets;
using detail::ColouringEnumerator;

Buckets run(const ColouringEnumerator& e) {
  const int split = e.vertex_count() < 3 ? e.vertex_count() : 3;
  const auto work = e.prefixes(split);
  Buckets total{};
  const long tasks = static_cast<long>(work.size());
#pragma omp parallel
  {
    Buckets local{};
#pragma omp for schedule(dynamic)
    for (long i = 0; i < tasks; ++i) e.complete(work[static_cast<std::size_t>(i)], local);
#pragma omp critical(tristrip_colouring_merge)
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += local[k];
  }
  return total;
}

}  // namespace

Count count_colourings(const Graph& g, int x) {
  return run(ColouringEnumerator(g, x, Bucketing::none))[0];
}

TypeCounts count_by_type(const Graph& g, const Frame& frame, int x) {
  Buckets b = run(ColouringEnumerator(g, x, Bucketing::one_frame, frame));
  return {b[0], b[1], b[2], b[3]};
}

TypeMatrix count_by_two_frames(const Graph& g, const Frame& rows, const Frame& cols, int x) {
  Buckets b = run(ColouringEnumerator(g, x, Bucketing::two_frames, rows, cols));
  TypeMatrix m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = b[static_cast<std::size_t>(4 * i + j)];
  }
  return m;
}

std::vector<int> sign_sweep(std::span<const Rational> points, const SignProbe& probe) {
  std::vector<int> out(points.size(), 0);
  std::exception_ptr failure;
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = probe(points[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(tristrip_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tristrip::kernels::parallel
