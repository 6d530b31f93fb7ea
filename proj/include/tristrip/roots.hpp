#pragma once

#include <optional>
#include <string>

#include "tristrip/kernels.hpp"
#include "tristrip/numeric.hpp"
#include "tristrip/partition.hpp"
#include "tristrip/polynomial.hpp"

namespace tristrip {

// A sign change of some function on [lo, hi]. sign_hi may be 0 when hi is an
// exact root found while probing.
struct RootBracket {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
};

struct RootInterval {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
  unsigned steps = 0;

  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  std::string decimal(int digits) const { return to_decimal(midpoint(), digits); }
};

struct BracketOptions {
  int first_k = 1;
  int last_k = 48;
  // Equal cells the first bracket is cut into; the rightmost sign change wins.
  int refine_cells = 32;
  bool parallel = true;
};

// Probes `sign_at` at 4 and at 4 - 2^-k for k = first_k..last_k. Takes the
// largest k with a negative sign and refines to the rightmost sign change
// between that point and the next probe. Throws NonPositiveAtFour or
// NoSignChange.
RootBracket bracket_near_four(const kernels::SignProbe& sign_at, const BracketOptions& options = {});

// Same, for the strip family with ends qa, qb and n copies, probed pointwise.
RootBracket bracket_near_four(const PartitionVector& qa, const PartitionVector& qb, unsigned long n,
                              const BracketOptions& options = {});

// 10^-11, the default width for largest-root reports.
Rational default_root_width();

// Halves until hi - lo <= width. Every step is an exact sign.
RootInterval bisect(const RootBracket& bracket, const kernels::SignProbe& sign_at, const Rational& width);

// Number of distinct real roots of p in (lo, hi]. p need not be squarefree;
// the squarefree part is taken first.
int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

inline constexpr unsigned long kMaxCertifiedN = 32;

struct LargestRoot {
  unsigned long n = 0;
  RootInterval interval;
  // Set when the family polynomial was built symbolically (n <= kMaxCertifiedN).
  std::optional<IntPolynomial> polynomial;
  // sturm_count over (interval.hi, 4] == 0 and over (interval.lo, interval.hi] == 1.
  std::optional<bool> certified;
};

struct LargestRootOptions {
  Rational width = default_root_width();
  BracketOptions bracket;
  // Build the symbolic polynomial and certify with Sturm when n <= kMaxCertifiedN.
  bool certify = true;
};

// Largest real root below 4 of the family polynomial with ends qa, qb.
LargestRoot largest_root_near_four(const PartitionVector& qa, const PartitionVector& qb, unsigned long n,
                                   const LargestRootOptions& options = {});

}  // namespace tristrip
