#pragma once

#include <array>

#include "tristrip/chromatic.hpp"
#include "tristrip/graph.hpp"
#include "tristrip/polynomial.hpp"

namespace tristrip {

// Q(A, x) = (P1, P2, P3, P4): colourings of A split by the type they induce
// on the frame.
struct PartitionVector {
  std::array<IntPolynomial, 4> p;

  IntPolynomial sum() const { return p[0] + p[1] + p[2] + p[3]; }
  std::array<Rational, 4> evaluate(const Rational& x) const;
  const IntPolynomial& operator[](std::size_t i) const { return p[i]; }
  IntPolynomial& operator[](std::size_t i) { return p[i]; }

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
};

// Each component is the chromatic polynomial of the matching auxiliary graph
// (identify the pairs that share a colour, join the pairs that do not).
PartitionVector partitioned_chromatic(const FramedGraph& fg, const EngineOptions& options = {});
PartitionVector partitioned_chromatic(const FramedGraph& fg, ChromaticEngine& engine);

// Same frame traversed the other way round (a1 a4 a3 a2).
FramedGraph reverse_frame(const FramedGraph& fg);

}  // namespace tristrip
