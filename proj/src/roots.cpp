#include "tristrip/roots.hpp"

#include <vector>

#include "tristrip/errors.hpp"
#include "tristrip/transfer.hpp"

namespace tristrip {

namespace {

std::vector<int> sweep(std::span<const Rational> points, const kernels::SignProbe& probe, bool parallel) {
  return parallel ? kernels::parallel::sign_sweep(points, probe) : kernels::serial::sign_sweep(points, probe);
}

// Rightmost negative-to-nonnegative change on [lo, hi], sign(lo) < 0 and sign(hi) >= 0.
RootBracket refine_rightmost(const Rational& lo, const Rational& hi, int sign_hi, const kernels::SignProbe& sign_at,
                             const BracketOptions& options) {
  RootBracket best{lo, hi, -1, sign_hi};
  if (options.refine_cells < 2) return best;
  std::vector<Rational> cuts;
  cuts.reserve(options.refine_cells - 1);
  Rational step = (hi - lo) / options.refine_cells;
  for (int i = 1; i < options.refine_cells; ++i) cuts.push_back(lo + step * i);
  std::vector<int> signs = sweep(cuts, sign_at, options.parallel);

  std::vector<Rational> xs{lo};
  std::vector<int> ss{-1};
  xs.insert(xs.end(), cuts.begin(), cuts.end());
  ss.insert(ss.end(), signs.begin(), signs.end());
  xs.push_back(hi);
  ss.push_back(sign_hi);
  for (std::size_t i = xs.size() - 1; i-- > 0;) {
    if (ss[i] < 0 && ss[i + 1] >= 0) return RootBracket{xs[i], xs[i + 1], ss[i], ss[i + 1]};
  }
  return best;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
  int count = 0;
  int previous = 0;
  for (const auto& p : chain) {
    int s = sign(p.evaluate(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

}  // namespace

RootBracket bracket_near_four(const kernels::SignProbe& sign_at, const BracketOptions& options) {
  if (options.first_k < 0 || options.last_k < options.first_k) throw std::invalid_argument("bad probe range");
  const Rational four(4);
  if (sign_at(four) <= 0) throw NonPositiveAtFour("value at 4 is not positive");

  std::vector<Rational> points;
  for (int k = options.first_k; k <= options.last_k; ++k) points.push_back(four - power_of_two(-k));
  std::vector<int> signs = sweep(points, sign_at, options.parallel);

  for (std::size_t i = points.size(); i-- > 0;) {
    if (signs[i] >= 0) continue;
    const Rational& hi = i + 1 < points.size() ? points[i + 1] : four;
    int sign_hi = i + 1 < points.size() ? signs[i + 1] : 1;
    return refine_rightmost(points[i], hi, sign_hi, sign_at, options);
  }
  throw NoSignChange("no negative value found at 4 - 2^-k for k <= " + std::to_string(options.last_k));
}

RootBracket bracket_near_four(const PartitionVector& qa, const PartitionVector& qb, unsigned long n,
                              const BracketOptions& options) {
  if (n < 1) throw std::invalid_argument("family index must be at least 1");
  auto probe = [&](const Rational& x) { return sign(family_value_at(qa, qb, n, x)); };
  return bracket_near_four(probe, options);
}

Rational default_root_width() { return Rational(1, Integer("100000000000")); }

RootInterval bisect(const RootBracket& bracket, const kernels::SignProbe& sign_at, const Rational& width) {
  if (!(bracket.lo < bracket.hi)) throw std::invalid_argument("bracket must satisfy lo < hi");
  if (width <= 0) throw std::invalid_argument("width must be positive");
  RootInterval r{bracket.lo, bracket.hi, bracket.sign_lo, bracket.sign_hi, 0};
  if (r.sign_lo == 0) return RootInterval{r.lo, r.lo, 0, 0, 0};
  if (r.sign_hi == 0) return RootInterval{r.hi, r.hi, 0, 0, 0};
  if (r.sign_lo == r.sign_hi) throw std::invalid_argument("bracket endpoints have equal signs");
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    int s = sign_at(mid);
    ++r.steps;
    if (s == 0) return RootInterval{mid, mid, 0, 0, r.steps};
    if (s == r.sign_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (!(lo < hi)) return 0;
  IntPolynomial f = squarefree_part(p);
  if (f.degree() < 1) return 0;
  std::vector<IntPolynomial> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    IntPolynomial r = sign_preserving_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r.divide_exact(r.content()));
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

LargestRoot largest_root_near_four(const PartitionVector& qa, const PartitionVector& qb, unsigned long n,
                                   const LargestRootOptions& options) {
  if (n < 1) throw std::invalid_argument("family index must be at least 1");
  LargestRoot out;
  out.n = n;
  kernels::SignProbe probe;
  if (options.certify && n <= kMaxCertifiedN) {
    out.polynomial = family_polynomial(qa, qb, n);
    const IntPolynomial& p = *out.polynomial;
    probe = [&p](const Rational& x) { return sign(p.evaluate(x)); };
  } else {
    probe = [&](const Rational& x) { return sign(family_value_at(qa, qb, n, x)); };
  }
  RootBracket bracket = bracket_near_four(probe, options.bracket);
  out.interval = bisect(bracket, probe, options.width);
  if (out.polynomial) {
    const auto& iv = out.interval;
    bool unique_here = iv.lo == iv.hi ? true : sturm_count(*out.polynomial, iv.lo, iv.hi) == 1;
    bool none_above = sturm_count(*out.polynomial, iv.hi, Rational(4)) == 0;
    out.certified = unique_here && none_above;
  }
  return out;
}

}  // namespace tristrip
