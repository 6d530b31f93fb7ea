#pragma once

#include <string>
#include <utility>

#include "tristrip/numeric.hpp"
#include "tristrip/polynomial.hpp"

namespace tristrip {

// a + b*sqrt(d) with rational a, b and a positive integer radicand d.
//
// Values with different radicands never mix: binary operations throw
// FieldMismatch. When d is a perfect square the b-part is folded into a on
// construction, so the degenerate field behaves as plain Q.
class QuadExt {
 public:
  // Zero of the trivial extension (radicand 1); assign before use.
  QuadExt() : QuadExt(Integer(1)) {}
  explicit QuadExt(Integer radicand);
  QuadExt(Rational a, Rational b, Integer radicand);

  static QuadExt rational(const Rational& a, const Integer& radicand) { return QuadExt(a, 0, radicand); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  // Exact: decided by comparing a^2 against b^2 d.
  int sign() const;

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
  // a^2 - b^2 d
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  QuadExt inverse() const;
  QuadExt pow(long exponent) const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }
  QuadExt& operator*=(const Rational& r);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator*(QuadExt x, const Rational& r) { return x *= r; }
  friend QuadExt operator*(const Rational& r, QuadExt x) { return x *= r; }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y);

  // Nearest double, for reporting only.
  double to_double() const;
  std::string to_string() const;

 private:
  void require_same_field(const QuadExt& o) const;
  void fold_if_square();

  Rational a_;
  Rational b_;
  Integer d_;
  Integer root_;  // sqrt(d) when d is a perfect square, else 0
};

int quad_sign(const QuadExt& s);

QuadExt evaluate(const IntPolynomial& p, const QuadExt& x);

// Writes n = r^2 * d with d free of prime-square factors below `trial_bound`
// (and d not a perfect square unless d = 1). Returns {r, d}.
std::pair<Integer, Integer> extract_square_factor(const Integer& n, unsigned long trial_bound = 20000);

}  // namespace tristrip
