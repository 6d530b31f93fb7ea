#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "tristrip/polynomial.hpp"

namespace tristrip {

using BigFloat = boost::multiprecision::mpfr_float;

struct ComplexRoot {
  BigFloat re;
  BigFloat im;
};

struct ComplexRootSet {
  // Sorted by (re, im); a root of multiplicity m appears m times.
  std::vector<ComplexRoot> roots;
  // |p(z)| / ||p||_2 per root, same order.
  std::vector<double> residuals;
  int precision_bits = 0;
  int iterations = 0;
  // Every root settled and max residual below 2^(-precision_bits/2).
  bool converged = false;

  double max_residual() const;
};

struct ComplexRootOptions {
  int precision_bits = 256;
  int max_iterations = 2000;
  // One more run at doubled precision, seeded with the previous estimates.
  bool retry_doubled = true;
};

// Aberth-Ehrlich simultaneous iteration in MPFR arithmetic. Degree must be in
// 1..600. Not thread safe: it changes the global MPFR default precision for
// the duration of the call.
ComplexRootSet complex_roots(const IntPolynomial& p, const ComplexRootOptions& options = {});
inline ComplexRootSet complex_roots(const IntPolynomial& p, int precision_bits) {
  return complex_roots(p, ComplexRootOptions{precision_bits});
}

// Smallest power of two >= 256 at which rounding noise in p(z) for |z| up to
// `radius` stays well below the 2^(-bits/2) residual target.
int suggested_precision_bits(const IntPolynomial& p, double radius = 4.5);

// Fixed-point rendering with `digits` places after the point.
std::string format_fixed(const BigFloat& v, int digits);

}  // namespace tristrip
