#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tristrip/complex_roots.hpp"
#include "tristrip/errors.hpp"
#include "tristrip/roots.hpp"
#include "tristrip/transfer.hpp"

using namespace tristrip;

namespace {

kernels::SignProbe poly_probe(const IntPolynomial& p) {
  return [p](const Rational& x) { return sgn(p.evaluate(x)); };
}

Rational decimal(const char* text) { return parse_rational(text); }

double to_double(const BigFloat& v) { return v.convert_to<double>(); }

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("bisection finds sqrt 2") {
  IntPolynomial p{-2, 0, 1};
  RootBracket b{Rational(1), Rational(2), -1, 1};
  Rational width(1, 1000000000000L);
  RootInterval iv = bisect(b, poly_probe(p), width);
  CHECK(iv.width() <= width);
  CHECK(sgn(p.evaluate(iv.lo)) == -1);
  CHECK(sgn(p.evaluate(iv.hi)) == 1);
  CHECK(iv.sign_lo == -1);
  CHECK(iv.sign_hi == 1);
  CHECK(iv.decimal(12) == "1.414213562373");
  CHECK(iv.steps == 40);
}

TEST_CASE("bisection edge cases") {
  IntPolynomial p{-1, 1};
  auto probe = poly_probe(p);
  CHECK_THROWS_AS(bisect({Rational(2), Rational(0), 1, -1}, probe, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(bisect({Rational(0), Rational(2), -1, -1}, probe, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(bisect({Rational(0), Rational(2), -1, 1}, probe, Rational(0)), std::invalid_argument);
  // Midpoint lands on the root exactly.
  RootInterval exact = bisect({Rational(0), Rational(2), -1, 1}, probe, Rational(1, 1000));
  CHECK(exact.lo == 1);
  CHECK(exact.hi == 1);
  // Already narrow enough.
  CHECK(bisect({Rational(0), Rational(2), -1, 1}, probe, Rational(5)).steps == 0);
}

TEST_CASE("sturm counts on small examples") {
  CHECK(sturm_count(IntPolynomial{-2, 0, 1}, Rational(0), Rational(2)) == 1);
  IntPolynomial cubic = IntPolynomial::linear_root(Integer(1)) * IntPolynomial::linear_root(Integer(2)) *
                        IntPolynomial::linear_root(Integer(3));
  CHECK(sturm_count(cubic, Rational(0), Rational(4)) == 3);
  // Half-open: the root at lo is excluded, the one at hi included.
  CHECK(sturm_count(cubic, Rational(1), Rational(3)) == 2);
  CHECK(sturm_count(cubic * cubic, Rational(0), Rational(4)) == 3);
  CHECK(sturm_count(IntPolynomial{1, 0, 1}, Rational(-10), Rational(10)) == 0);
  CHECK(sturm_count(IntPolynomial{5}, Rational(-10), Rational(10)) == 0);
}

TEST_CASE("sturm counts on random products of linear factors") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<long> root_num(-40, 40);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial p = IntPolynomial::constant(Integer(1 + trial % 3));
    std::vector<Rational> roots;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      // (4x - r) has root r/4; repeated factors test the squarefree step.
      long r = root_num(rng);
      int m = mult(rng);
      for (int j = 0; j < m; ++j) p *= IntPolynomial{-r, 4};
      Rational root(r, 4);
      root.canonicalize();
      if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
    }
    Rational lo(-7, 3), hi(11, 2);
    int expected = static_cast<int>(std::count_if(roots.begin(), roots.end(),
                                                  [&](const Rational& r) { return lo < r && r <= hi; }));
    CHECK(sturm_count(p, lo, hi) == expected);
    CHECK(sturm_count(p, Rational(-100), Rational(100)) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("brackets near four for the H, W4 family") {
  const auto& h = testing::q_of("H");
  const auto& w4 = testing::q_of("W4");
  for (auto [n, value] : {std::pair{1UL, "3.7924699360"}, std::pair{2UL, "3.8267852044"}}) {
    RootBracket b = bracket_near_four(h, w4, n);
    CHECK(b.lo < b.hi);
    CHECK(b.sign_lo == -1);
    CHECK(b.hi <= 4);
    CHECK(b.lo < decimal(value));
    CHECK(decimal(value) < b.hi);
    BracketOptions serial;
    serial.parallel = false;
    RootBracket s = bracket_near_four(h, w4, n, serial);
    CHECK(s.lo == b.lo);
    CHECK(s.hi == b.hi);
  }
  CHECK_THROWS_AS(bracket_near_four(w4, w4, 3), NoSignChange);
  CHECK_THROWS_AS(bracket_near_four([](const Rational&) { return -1; }), NonPositiveAtFour);
  CHECK_THROWS_AS(bracket_near_four([](const Rational&) { return 1; }), NoSignChange);
}

TEST_CASE("largest roots match the reference values and are certified") {
  const auto& h = testing::q_of("H");
  const auto& w4 = testing::q_of("W4");
  const Rational tolerance(1, 2000000000);
  const std::vector<std::pair<unsigned long, const char*>> rows{
      {1, "3.7924699360"}, {2, "3.8267852044"}, {3, "3.8483432574"}, {5, "3.8756040984"}, {10, "3.9100811222"}};
  Rational previous(0);
  for (const auto& [n, value] : rows) {
    CAPTURE(n);
    LargestRoot r = largest_root_near_four(h, w4, n);
    CHECK(r.interval.width() <= default_root_width());
    CHECK(abs(r.interval.midpoint() - decimal(value)) <= tolerance);
    REQUIRE(r.polynomial.has_value());
    REQUIRE(r.certified.has_value());
    CHECK(*r.certified);
    CHECK(sturm_count(*r.polynomial, r.interval.lo, r.interval.hi) == 1);
    CHECK(sturm_count(*r.polynomial, r.interval.hi + default_root_width(), Rational(4)) == 0);
    CHECK(r.interval.midpoint() > previous);
    previous = r.interval.midpoint();
  }
  // Pointwise route above the certification limit.
  LargestRootOptions o;
  o.certify = false;
  LargestRoot big = largest_root_near_four(h, w4, 65, o);
  CHECK_FALSE(big.polynomial.has_value());
  CHECK(abs(big.interval.midpoint() - decimal("3.9717321001")) <= tolerance);
}

TEST_CASE("complex roots of small polynomials") {
  ComplexRootSet i = complex_roots(IntPolynomial{1, 0, 1}, 128);
  REQUIRE(i.roots.size() == 2);
  CHECK(i.converged);
  CHECK(to_double(i.roots[0].re) == doctest::Approx(0).epsilon(1e-30));
  CHECK(to_double(i.roots[0].im) == doctest::Approx(-1));
  CHECK(to_double(i.roots[1].im) == doctest::Approx(1));

  // C4: x(x-1)(x^2-3x+3)
  ComplexRootSet c4 = complex_roots(IntPolynomial{0, -3, 6, -4, 1}, 256);
  REQUIRE(c4.roots.size() == 4);
  CHECK(c4.converged);
  CHECK(c4.max_residual() < 1e-30);
  CHECK(format_fixed(c4.roots[0].re, 20) == "0.00000000000000000000");
  CHECK(format_fixed(c4.roots[1].re, 20) == "1.00000000000000000000");
  CHECK(format_fixed(c4.roots[2].re, 6) == "1.500000");
  CHECK(format_fixed(c4.roots[2].im, 20) == "-0.86602540378443864676");
  CHECK(format_fixed(c4.roots[3].im, 20) == "0.86602540378443864676");

  CHECK_THROWS(complex_roots(IntPolynomial{3}, 128));
}

TEST_CASE("root sums and products match the coefficients") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Integer> c;
    for (int i = 0; i < 12; ++i) c.push_back(Integer(coef(rng)));
    c.push_back(Integer(1 + trial % 4));
    if (c[0] == 0) c[0] = 1;
    IntPolynomial p(c);
    ComplexRootSet set = complex_roots(p, 256);
    REQUIRE(set.converged);
    REQUIRE(set.roots.size() == 12);
    BigFloat sum_re = 0, sum_im = 0, prod_re = 1, prod_im = 0;
    for (const auto& z : set.roots) {
      sum_re += z.re;
      sum_im += z.im;
      BigFloat r = prod_re * z.re - prod_im * z.im;
      prod_im = prod_re * z.im + prod_im * z.re;
      prod_re = r;
    }
    double lead = p.leading().get_d();
    CHECK(to_double(sum_re) == doctest::Approx(-c[11].get_d() / lead).epsilon(1e-12));
    CHECK(std::abs(to_double(sum_im)) < 1e-20);
    CHECK(to_double(prod_re) == doctest::Approx(c[0].get_d() / lead).epsilon(1e-12));
    CHECK(std::abs(to_double(prod_im)) < 1e-20);
    // Conjugate closure.
    for (const auto& z : set.roots) {
      bool found = std::any_of(set.roots.begin(), set.roots.end(), [&](const ComplexRoot& w) {
        return abs(w.re - z.re) < 1e-40 && abs(w.im + z.im) < 1e-40;
      });
      CHECK(found);
    }
  }
}

TEST_CASE("real roots of the n = 10 polynomial agree with bisection") {
  IntPolynomial p = family_polynomial(testing::q_of("H"), testing::q_of("W4"), 10);
  REQUIRE(p.degree() == 53);
  CHECK(suggested_precision_bits(p) == 256);
  ComplexRootSet set = complex_roots(p, 256);
  REQUIRE(set.roots.size() == 53);
  CHECK(set.converged);
  CHECK(set.max_residual() < 1e-20);
  int at_three = 0;
  double largest = 0;
  for (const auto& z : set.roots) {
    if (abs(z.im) > 1e-30) continue;
    double re = to_double(z.re);
    if (std::abs(re - 3) < 1e-30) ++at_three;
    if (re < 4) largest = std::max(largest, re);
  }
  CHECK(at_three == 10);
  LargestRoot r = largest_root_near_four(testing::q_of("H"), testing::q_of("W4"), 10);
  CHECK(std::abs(largest - r.interval.midpoint().get_d()) < 1e-8);
}

}  // TEST_SUITE
