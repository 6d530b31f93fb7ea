#include "tristrip/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>

namespace tristrip {

namespace {

template <typename Real>
struct Complex {
  Real re;
  Real im;
};

template <typename Real>
Complex<Real> operator+(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <typename Real>
Complex<Real> operator-(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <typename Real>
Complex<Real> operator*(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename Real>
Complex<Real> operator/(const Complex<Real>& a, const Complex<Real>& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
template <typename Real>
Real modulus(const Complex<Real>& a) {
  using std::sqrt;
  return sqrt(a.re * a.re + a.im * a.im);
}

using Cx = Complex<BigFloat>;
using Seed = Complex<long double>;

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

template <typename Real>
struct Evaluation {
  Complex<Real> value;
  Complex<Real> slope;
  // sum |c_i| |z|^i, the scale of rounding noise in `value`.
  Real magnitude;
};

template <typename Real>
Evaluation<Real> evaluate(const std::vector<Real>& c, const Complex<Real>& z) {
  using std::abs;
  Evaluation<Real> e{{c.back(), Real(0)}, {Real(0), Real(0)}, abs(c.back())};
  Real r = modulus(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    e.slope = e.slope * z + e.value;
    e.value = e.value * z + Complex<Real>{c[i], Real(0)};
    e.magnitude = e.magnitude * r + abs(c[i]);
  }
  return e;
}

// Positive root of |c_n| x^n - sum_{i<n} |c_i| x^i; every root lies within it.
long double cauchy_radius(const std::vector<long double>& c) {
  auto f = [&](long double x) {
    long double s = 0;
    for (std::size_t i = c.size() - 1; i-- > 0;) s = s * x + std::fabs(c[i]);
    return std::fabs(c.back()) * std::pow(x, static_cast<long double>(c.size() - 1)) - s;
  };
  long double hi = 1;
  while (f(hi) <= 0) hi *= 2;
  long double lo = hi / 2;
  while (f(lo) > 0) lo /= 2;
  for (int i = 0; i < 64; ++i) {
    long double mid = (lo + hi) / 2;
    (f(mid) > 0 ? hi : lo) = mid;
  }
  return hi;
}

template <typename Real>
struct RunResult {
  std::vector<Complex<Real>> z;
  int iterations = 0;
  bool settled = false;
};

// Gauss-Seidel Aberth sweeps. A root is frozen once its correction is below
// eps relative to |z| or |p(z)| sits in the rounding noise.
template <typename Real>
RunResult<Real> aberth(const std::vector<Real>& c, std::vector<Complex<Real>> z, const Real& eps, int max_iterations) {
  const std::size_t n = z.size();
  const Complex<Real> one{Real(1), Real(0)};
  std::vector<bool> done(n, false);
  RunResult<Real> out;
  for (int it = 0; it < max_iterations; ++it) {
    std::size_t active = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Evaluation<Real> e = evaluate(c, z[k]);
      if (modulus(e.value) <= 8 * eps * e.magnitude) {
        done[k] = true;
        continue;
      }
      ++active;
      Complex<Real> ratio = e.value / e.slope;
      Complex<Real> sum{Real(0), Real(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum = sum + one / (z[k] - z[j]);
      }
      Complex<Real> step = ratio / (one - ratio * sum);
      z[k] = z[k] - step;
      Real scale = modulus(z[k]);
      if (scale < 1) scale = 1;
      if (modulus(step) <= eps * scale) done[k] = true;
    }
    out.iterations = it + 1;
    if (active == 0) {
      out.settled = true;
      break;
    }
  }
  out.z = std::move(z);
  return out;
}

std::vector<Seed> seed_estimates(std::span<const Integer> coeffs, int max_iterations) {
  std::vector<long double> c;
  for (std::size_t i = 0; i < coeffs.size(); ++i) c.push_back(std::strtold(coeffs[i].get_str().c_str(), nullptr));
  const std::size_t m = c.size() - 1;
  const long double radius = cauchy_radius(c);
  const long double two_pi = 2 * std::acos(-1.0L);
  std::vector<Seed> z;
  for (std::size_t k = 0; k < m; ++k) {
    long double theta = two_pi * k / m + two_pi / (4 * m) + 0.4L;
    z.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  return aberth(c, std::move(z), std::numeric_limits<long double>::epsilon(), max_iterations).z;
}

// Pairs z with a nearby conjugate partner and replaces both by the symmetric
// average; near-real singletons become real.
void symmetrize(std::vector<Cx>& z, int bits) {
  const BigFloat tol = boost::multiprecision::ldexp(BigFloat(1), -bits / 4);
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i] || z[i].im <= 0) continue;
    BigFloat scale = std::max(BigFloat(1), modulus(z[i]));
    std::size_t best = z.size();
    BigFloat best_distance = tol * scale;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i || used[j] || z[j].im >= 0) continue;
      BigFloat d = modulus(Cx{z[i].re - z[j].re, z[i].im + z[j].im});
      if (d <= best_distance) {
        best_distance = d;
        best = j;
      }
    }
    if (best == z.size()) continue;
    BigFloat re = (z[i].re + z[best].re) / 2;
    BigFloat im = (z[i].im - z[best].im) / 2;
    z[i] = {re, im};
    z[best] = {re, -im};
    used[i] = used[best] = true;
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    if (boost::multiprecision::abs(z[i].im) <= tol * std::max(BigFloat(1), modulus(z[i]))) z[i].im = 0;
  }
}

}  // namespace

double ComplexRootSet::max_residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

namespace {

std::vector<BigFloat> to_big(std::span<const Integer> coeffs) {
  std::vector<BigFloat> c;
  for (const auto& v : coeffs) c.emplace_back(v.get_str());
  return c;
}

// Re-reads every estimate under the current default precision.
std::vector<Cx> rescale(const std::vector<Cx>& z) {
  std::vector<Cx> out;
  out.reserve(z.size());
  for (const auto& v : z) out.push_back({BigFloat(v.re.str()), BigFloat(v.im.str())});
  return out;
}

BigFloat epsilon_bits(int bits) { return BigFloat(boost::multiprecision::ldexp(BigFloat(1), -bits)); }

RunResult<BigFloat> solve_squarefree(const IntPolynomial& f, int bits, int max_iterations) {
  auto coeffs = f.coefficients();
  if (f.degree() == 1) {
    PrecisionScope scope(bits);
    BigFloat root = -BigFloat(coeffs[0].get_str()) / BigFloat(coeffs[1].get_str());
    return {{Cx{root, BigFloat(0)}}, 0, true};
  }
  std::vector<Cx> estimates;
  {
    PrecisionScope scope(64);
    for (const auto& z : seed_estimates(coeffs, max_iterations)) estimates.push_back({BigFloat(z.re), BigFloat(z.im)});
  }
  // Intermediate precisions are cheap and leave few sweeps at full precision.
  for (int rung = 128; rung < bits; rung *= 2) {
    PrecisionScope scope(rung);
    estimates = aberth(to_big(coeffs), rescale(estimates), epsilon_bits(rung), max_iterations).z;
  }
  PrecisionScope scope(bits);
  return aberth(to_big(coeffs), rescale(estimates), epsilon_bits(bits), max_iterations);
}

}  // namespace

ComplexRootSet complex_roots(const IntPolynomial& p, const ComplexRootOptions& options) {
  const int degree = p.degree();
  if (degree < 1) throw std::invalid_argument("complex_roots needs degree >= 1");
  if (degree > 600) throw std::invalid_argument("complex_roots supports degree <= 600");
  if (options.precision_bits < 32) throw std::invalid_argument("precision_bits must be at least 32");

  // Repeated roots (such as 3 in the strip families) would only converge
  // linearly, so each squarefree factor is solved on its own.
  const auto factors = squarefree_decomposition(p);
  int bits = options.precision_bits;
  ComplexRootSet out;
  int total_iterations = 0;
  for (int attempt = 0; attempt < (options.retry_doubled ? 2 : 1); ++attempt) {
    bool settled = true;
    std::vector<Cx> roots;
    for (const auto& [factor, multiplicity] : factors) {
      auto run = solve_squarefree(factor, bits, options.max_iterations);
      settled = settled && run.settled;
      total_iterations += run.iterations;
      PrecisionScope scope(bits);
      auto z = rescale(run.z);
      symmetrize(z, bits);
      for (int m = 0; m < multiplicity; ++m) roots.insert(roots.end(), z.begin(), z.end());
    }

    PrecisionScope scope(bits);
    auto c = to_big(p.coefficients());
    BigFloat norm = 0;
    for (const auto& v : c) norm += v * v;
    norm = sqrt(norm);

    out = ComplexRootSet{};
    out.precision_bits = bits;
    out.iterations = total_iterations;
    for (const auto& z : roots) {
      out.roots.push_back({z.re, z.im});
      out.residuals.push_back(BigFloat(modulus(evaluate(c, z).value) / norm).convert_to<double>());
    }
    out.converged = settled && out.max_residual() < std::ldexp(1.0, -bits / 2);
    if (out.converged) break;
    bits *= 2;
  }

  std::vector<std::size_t> order(out.roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (out.roots[a].re != out.roots[b].re) return out.roots[a].re < out.roots[b].re;
    return out.roots[a].im < out.roots[b].im;
  });
  ComplexRootSet sorted;
  sorted.precision_bits = out.precision_bits;
  sorted.iterations = out.iterations;
  sorted.converged = out.converged;
  for (auto i : order) {
    sorted.roots.push_back(out.roots[i]);
    sorted.residuals.push_back(out.residuals[i]);
  }
  return sorted;
}

int suggested_precision_bits(const IntPolynomial& p, double radius) {
  // log2 of sum |c_i| radius^i and of ||p||_2, accumulated as log-sum-exp.
  double scale = -HUGE_VAL;
  double norm = -HUGE_VAL;
  auto add_log = [](double acc, double term) {
    if (acc == -HUGE_VAL) return term;
    double hi = std::max(acc, term);
    return hi + std::log2(std::exp2(acc - hi) + std::exp2(term - hi));
  };
  auto coeffs = p.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, coeffs[i].get_mpz_t());
    double log_c = std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
    scale = add_log(scale, log_c + static_cast<double>(i) * std::log2(radius));
    norm = add_log(norm, 2 * log_c);
  }
  double noise = scale - norm / 2;
  int bits = 256;
  while (bits < 2 * noise + 64) bits *= 2;
  return bits;
}

std::string format_fixed(const BigFloat& v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  std::string s = os.str();
  if (s.find_first_not_of("-0.") == std::string::npos && !s.empty() && s[0] == '-') s.erase(0, 1);
  return s;
}

}  // namespace tristrip
