#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tristrip/graph.hpp"
#include "tristrip/numeric.hpp"

// Data-parallel kernels. Each kernel has a serial reference and an OpenMP
// version with identical results; tests compare the two and bench/ times them.
namespace tristrip::kernels {

using Count = std::uint64_t;
using TypeCounts = std::array<Count, 4>;
using TypeMatrix = std::array<std::array<Count, 4>, 4>;

// Sign of f at a probe point: -1, 0 or +1.
using SignProbe = std::function<int(const Rational&)>;

namespace serial {

// Proper colourings with colours 0..x-1, by exhaustive backtracking.
Count count_colourings(const Graph& g, int x);
// Proper colourings bucketed by the type they induce on `frame`.
TypeCounts count_by_type(const Graph& g, const Frame& frame, int x);
// Proper colourings bucketed by (type on `rows`, type on `cols`).
TypeMatrix count_by_two_frames(const Graph& g, const Frame& rows, const Frame& cols, int x);
// probe(points[i]) for every i, in order.
std::vector<int> sign_sweep(std::span<const Rational> points, const SignProbe& probe);

}  // namespace serial

namespace parallel {

Count count_colourings(const Graph& g, int x);
TypeCounts count_by_type(const Graph& g, const Frame& frame, int x);
TypeMatrix count_by_two_frames(const Graph& g, const Frame& rows, const Frame& cols, int x);
// The probe must be safe to call concurrently; results are ordered by index.
std::vector<int> sign_sweep(std::span<const Rational> points, const SignProbe& probe);

}  // namespace parallel

}  // namespace tristrip::kernels

namespace tristrip {

// Brute-force count of proper x-colourings; the independent check on the
// deletion-contraction engine. Throws ResourceLimitError unless
// vertex_count <= 12 and 0 <= x <= 12.
std::uint64_t count_colourings_oracle(const Graph& g, int x);

}  // namespace tristrip
