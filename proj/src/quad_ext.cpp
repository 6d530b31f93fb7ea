#include "tristrip/quad_ext.hpp"

#include <cmath>
#include <sstream>

#include "tristrip/errors.hpp"

namespace tristrip {

QuadExt::QuadExt(Integer radicand) : QuadExt(0, 0, std::move(radicand)) {}

QuadExt::QuadExt(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (d_ <= 0) throw std::invalid_argument("radicand must be positive");
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    mpz_sqrt(root_.get_mpz_t(), d_.get_mpz_t());
  }
  fold_if_square();
}

void QuadExt::fold_if_square() {
  if (root_ != 0 && sgn(b_) != 0) {
    a_ += b_ * root_;
    b_ = 0;
  }
}

void QuadExt::require_same_field(const QuadExt& o) const {
  if (d_ != o.d_) {
    throw FieldMismatch("quadratic extensions differ: sqrt(" + d_.get_str() + ") vs sqrt(" + o.d_.get_str() + ")");
  }
}

int QuadExt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare magnitudes a^2 vs b^2 d
  const int cmp_result = cmp(Rational(a_ * a_), Rational(b_ * b_ * d_));
  if (cmp_result == 0) return 0;
  return cmp_result > 0 ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in quadratic extension");
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt QuadExt::pow(long exponent) const {
  QuadExt base = exponent < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  QuadExt result(1, 0, d_);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  require_same_field(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * d_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& r) {
  a_ *= r;
  b_ *= r;
  return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

double QuadExt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadExt::to_string() const {
  std::ostringstream os;
  os << tristrip::to_string(a_);
  if (sgn(b_) != 0) os << " + (" << tristrip::to_string(b_) << ")*sqrt(" << d_.get_str() << ")";
  return os.str();
}

int quad_sign(const QuadExt& s) { return s.sign(); }

QuadExt evaluate(const IntPolynomial& p, const QuadExt& x) {
  QuadExt acc(x.radicand());
  auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= x;
    acc += QuadExt::rational(Rational(c[k]), x.radicand());
  }
  return acc;
}

std::pair<Integer, Integer> extract_square_factor(const Integer& n, unsigned long trial_bound) {
  if (n <= 0) throw std::invalid_argument("extract_square_factor needs a positive integer");
  Integer rest = n;
  Integer r = 1;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    return {s, 1};
  }
  for (unsigned long p = 2; p <= trial_bound; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
      rest /= pp;
      r *= p;
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      return {r * s, 1};
    }
  }
  return {r, rest};
}

}  // namespace tristrip
