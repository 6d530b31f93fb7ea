#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tristrip/numeric.hpp"

namespace tristrip {

// Dense univariate polynomial over the integers in the power basis.
// coefficients()[k] is the coefficient of x^k; the leading coefficient is
// nonzero unless the polynomial is zero, in which case the vector is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(unsigned power, const Integer& c = 1);
  // (x - root)
  static IntPolynomial linear_root(const Integer& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Integer> coefficients() const { return coeffs_; }
  // Zero beyond the degree.
  Integer coefficient(std::size_t power) const;
  const Integer& leading() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // Exact quotient; throws NonExactDivision on a nonzero remainder or when the
  // quotient would leave the integers.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;
  // Exact division of every coefficient; throws NonExactDivision otherwise.
  IntPolynomial divide_exact(const Integer& divisor) const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  IntPolynomial derivative() const;
  // Non-negative gcd of the coefficients (zero for the zero polynomial).
  Integer content() const;
  // this / content, with a positive leading coefficient.
  IntPolynomial primitive_part() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Pseudo-remainder of a by b scaled by |lc(b)|^(deg a - deg b + 1), so the
// sign of the remainder is that of the true remainder.
IntPolynomial sign_preserving_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient (primitive remainder sequence).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity = 0;
};

// Yun's algorithm: primitive pairwise coprime squarefree factors with
// p = content * prod factor^multiplicity up to sign. Constant factors are
// omitted; the zero polynomial is rejected.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

}  // namespace tristrip

#include <optional>

namespace tristrip {

// The unique polynomial of degree < points.size() through the given (x, y)
// pairs, or nullopt when it has a non-integer coefficient. x values must be
// distinct.
std::optional<IntPolynomial> interpolate_integer(std::span<const std::pair<Integer, Integer>> points);

}  // namespace tristrip
