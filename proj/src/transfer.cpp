#include "tristrip/transfer.hpp"

#include "tristrip/errors.hpp"
#include "tristrip/falling_factorial.hpp"
#include "tristrip/kernels.hpp"

namespace tristrip {

namespace {

TransferMatrix make_M() {
  const IntPolynomial ff4 = falling_factorial(4);
  const IntPolynomial ff5 = falling_factorial(5);
  const IntPolynomial ff6 = falling_factorial(6);
  const IntPolynomial mid = ff_to_power(ff_combo({{4, 1}, {5, 2}, {6, 1}}));
  const IntPolynomial edge = ff_to_power(ff_combo({{5, 4}, {6, 4}, {7, 1}}));
  const IntPolynomial corner = ff_to_power(ff_combo({{4, 2}, {5, 16}, {6, 20}, {7, 8}, {8, 1}}));
  TransferMatrix m;
  m.kind = MatrixKind::M;
  m.entries = {{
      {ff4, ff5, ff5, ff6},
      {ff5, mid, mid, edge},
      {ff5, mid, mid, edge},
      {ff6, edge, edge, corner},
  }};
  return m;
}

TransferMatrix make_MD() {
  const auto& den = d_denominators();
  TransferMatrix md = build_M();
  md.kind = MatrixKind::MD;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) md.entries[i][j] = md.entries[i][j].divide_exact(den[j]);
  }
  return md;
}

Mat4<Integer> multiply(const Mat4<Integer>& a, const Mat4<Integer>& b) {
  Mat4<Integer> c;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Integer s = 0;
      for (int k = 0; k < 4; ++k) mpz_addmul(s.get_mpz_t(), a[i][k].get_mpz_t(), b[k][j].get_mpz_t());
      c[i][j] = std::move(s);
    }
  }
  return c;
}

Mat4<IntPolynomial> multiply(const Mat4<IntPolynomial>& a, const Mat4<IntPolynomial>& b) {
  Mat4<IntPolynomial> c;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      IntPolynomial s;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      c[i][j] = std::move(s);
    }
  }
  return c;
}

void require_nonsingular_d(const Rational& x) {
  for (int r = 0; r <= 3; ++r) {
    if (x == r) throw SingularDError("D(x) is undefined at x = " + std::to_string(r));
  }
}

}  // namespace

const std::array<IntPolynomial, 4>& d_denominators() {
  static const std::array<IntPolynomial, 4> den{falling_factorial(2), falling_factorial(3), falling_factorial(3),
                                                falling_factorial(4)};
  return den;
}

Vec4<Rational> d_at(const Rational& x) {
  require_nonsingular_d(x);
  const auto& den = d_denominators();
  Vec4<Rational> out;
  for (int i = 0; i < 4; ++i) out[i] = 1 / den[i].evaluate(x);
  return out;
}

const TransferMatrix& build_M() {
  static const TransferMatrix m = make_M();
  return m;
}

const TransferMatrix& build_MD() {
  static const TransferMatrix md = make_MD();
  return md;
}

TransferMatrix symbolic_power(const TransferMatrix& md, unsigned long k) {
  TransferMatrix result;
  result.kind = MatrixKind::MD_power;
  result.power = k;
  for (int i = 0; i < 4; ++i) result.entries[i][i] = IntPolynomial::constant(1);
  Mat4<IntPolynomial> base = md.entries;
  for (unsigned long e = k; e > 0; e >>= 1) {
    if (e & 1UL) result.entries = multiply(result.entries, base);
    if (e > 1) base = multiply(base, base);
  }
  return result;
}

PartitionVector apply(const TransferMatrix& m, const PartitionVector& q) {
  PartitionVector out;
  for (int i = 0; i < 4; ++i) {
    IntPolynomial s;
    for (int j = 0; j < 4; ++j) s += m.entries[i][j] * q.p[j];
    out.p[i] = std::move(s);
  }
  return out;
}

EvaluatedTransferMatrix evaluate(const TransferMatrix& m, const Rational& x) {
  EvaluatedTransferMatrix out;
  out.kind = m.kind;
  out.power = m.power;
  out.x = x;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out.entries[i][j] = m.entries[i][j].evaluate(x);
  }
  return out;
}

EvaluatedTransferMatrix md_at(const Rational& x) {
  require_nonsingular_d(x);
  return evaluate(build_MD(), x);
}

EvaluatedTransferMatrix power(const EvaluatedTransferMatrix& m, unsigned long k) {
  // m = N / L with N integral; m^k = N^k / L^k
  Integer common = 1;
  for (const auto& row : m.entries) {
    for (const auto& e : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), e.get_den().get_mpz_t());
  }
  Mat4<Integer> base;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) base[i][j] = m.entries[i][j].get_num() * (common / m.entries[i][j].get_den());
  }
  Mat4<Integer> acc;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) acc[i][j] = i == j ? 1 : 0;
  }
  for (unsigned long e = k; e > 0; e >>= 1) {
    if (e & 1UL) acc = multiply(acc, base);
    if (e > 1) base = multiply(base, base);
  }
  const Integer scale = ipow(common, k);
  EvaluatedTransferMatrix out;
  out.kind = MatrixKind::MD_power;
  out.power = m.power * k;
  out.x = m.x;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.entries[i][j] = Rational(acc[i][j], scale);
      out.entries[i][j].canonicalize();
    }
  }
  return out;
}

IntPolynomial glue(const PartitionVector& qa, const PartitionVector& qb) {
  // over the common denominator ff4 = ff2 (x-2)(x-3) = ff3 (x-3)
  const IntPolynomial xm2 = IntPolynomial::linear_root(2);
  const IntPolynomial xm3 = IntPolynomial::linear_root(3);
  IntPolynomial numerator = qa.p[0] * qb.p[0] * xm2 * xm3;
  numerator += (qa.p[1] * qb.p[1] + qa.p[2] * qb.p[2]) * xm3;
  numerator += qa.p[3] * qb.p[3];
  return numerator.divide_exact(falling_factorial(4));
}

PartitionVector extend_one_layer(const PartitionVector& q) { return apply(build_MD(), q); }

IntPolynomial family_polynomial(const PartitionVector& qa, const PartitionVector& qb, unsigned long n,
                                unsigned long max_symbolic_n) {
  if (n < 1) throw std::invalid_argument("family index n must be at least 1");
  if (n > max_symbolic_n) {
    throw ResourceLimitError("symbolic family polynomial limited to n <= " + std::to_string(max_symbolic_n) +
                             "; use pointwise evaluation");
  }
  PartitionVector v = qb;
  for (unsigned long i = 1; i < n; ++i) v = extend_one_layer(v);
  return glue(qa, v);
}

Rational family_value_at(const PartitionVector& qa, const PartitionVector& qb, unsigned long n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("family index n must be at least 1");
  const Vec4<Rational> d = d_at(x);
  const auto a = qa.evaluate(x);
  const auto b = qb.evaluate(x);
  const EvaluatedTransferMatrix p = power(md_at(x), n - 1);
  Rational total = 0;
  for (int i = 0; i < 4; ++i) {
    Rational row = 0;
    for (int j = 0; j < 4; ++j) row += p.entries[i][j] * b[j];
    total += a[i] * d[i] * row;
  }
  return total;
}

GoldenCheck golden_identity_check(const IntPolynomial& p, int n_vertices) {
  const Integer five(5);
  const QuadExt tau(Rational(1, 2), Rational(1, 2), five);
  const QuadExt one = QuadExt::rational(1, five);
  const QuadExt two = QuadExt::rational(2, five);
  GoldenCheck out;
  out.exponent = 3L * n_vertices - 10;
  out.lhs = evaluate(p, tau + two);
  const QuadExt at_tau1 = evaluate(p, tau + one);
  out.rhs = (tau + two) * tau.pow(out.exponent) * at_tau1 * at_tau1;
  out.residual = out.lhs - out.rhs;
  out.pass = out.residual.is_zero();
  return out;
}

MOracleReport verify_M_against_oracle(bool use_parallel_kernel) {
  const Gadget l = gadget_layer();
  constexpr int kPoints = 10;  // x = 0..9; entries have degree <= 8
  MOracleReport report;
  report.counts.resize(kPoints);
  for (int x = 0; x < kPoints; ++x) {
    report.counts[x] = use_parallel_kernel ? kernels::parallel::count_by_two_frames(l.graph, l.outer, l.inner, x)
                                           : kernels::serial::count_by_two_frames(l.graph, l.outer, l.inner, x);
  }
  const TransferMatrix& m = build_M();
  report.all_pass = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::vector<std::pair<Integer, Integer>> pts;
      for (int x = 0; x < kPoints; ++x) pts.emplace_back(Integer(x), Integer(static_cast<unsigned long>(report.counts[x][i][j])));
      auto interp = interpolate_integer(pts);
      report.match[i][j] = interp.has_value() && *interp == m.entries[i][j];
      if (interp) report.interpolated[i][j] = *interp;
      report.all_pass = report.all_pass && report.match[i][j];
    }
  }
  return report;
}

}  // namespace tristrip
