#include "tristrip/polynomial.hpp"

#include <sstream>
#include <utility>

#include "tristrip/errors.hpp"

namespace tristrip {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(unsigned power, const Integer& c) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, Integer(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
  static const Integer zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw NonExactDivision("divisor degree exceeds dividend degree");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Integer& lead = divisor.coeffs_.back();
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonExactDivision("quotient leaves the integers");
    }
    Integer q = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), divisor.coeffs_[j].get_mpz_t());
    }
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw NonExactDivision("nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::divide_exact(const Integer& divisor) const {
  if (divisor == 0) throw NonExactDivision("division by zero");
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), divisor.get_mpz_t())) {
      throw NonExactDivision("coefficient not divisible");
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), divisor.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= x;
    acc += coeffs_[k];
  }
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  // sum c_k p^k q^(n-k), then one division by q^n
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = 0;
  Integer qpow = 1;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= p;
    acc += coeffs_[k] * qpow;
    qpow *= q;
  }
  // acc now holds sum c_k p^k q^(n-k) with n = degree
  Rational r(acc, ipow(q, static_cast<unsigned long>(degree())));
  r.canonicalize();
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(out));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  return divide_exact(g);
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial sign_preserving_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw NonExactDivision("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Integer lead = abs(b.leading());
  const int lead_sign = sgn(b.leading());
  // r <- |lc| r - sign(lc) * top * x^k * b, repeated deg a - deg b + 1 times
  int steps = a.degree() - b.degree() + 1;
  for (std::size_t top = r.size(); top-- > db && steps > 0; --steps) {
    Integer t = r[top];
    for (auto& c : r) c *= lead;
    if (t != 0) {
      if (lead_sign < 0) t = -t;
      std::size_t shift = top - db;
      for (std::size_t j = 0; j <= db; ++j) {
        mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
      }
    }
  }
  for (; steps > 0; --steps) {
    for (auto& c : r) c *= lead;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = sign_preserving_pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative()).primitive_part();
  return p.primitive_part().divide_exact(g).primitive_part();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  IntPolynomial f = p.primitive_part();
  IntPolynomial b = gcd(f, f.derivative());
  IntPolynomial c = f.divide_exact(b);
  IntPolynomial d = f.derivative().divide_exact(b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPolynomial a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = c.divide_exact(a);
    d = d.divide_exact(a) - c.derivative();
  }
  return out;
}

}  // namespace tristrip

namespace tristrip {

std::optional<IntPolynomial> interpolate_integer(std::span<const std::pair<Integer, Integer>> points) {
  const std::size_t n = points.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span(points[i].first - points[i - level].first);
      if (sgn(span) == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  std::vector<Rational> coeffs(n == 0 ? 0 : n, Rational(0));
  // Horner on the Newton form: p = dd[n-1]; p = p*(x - x_i) + dd[i]
  std::vector<Rational> acc;
  for (std::size_t i = n; i-- > 0;) {
    // acc <- acc * (x - x_i) + dd[i]
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] -= acc[k] * points[i].first;
    }
    next[0] += dd[i];
    acc = std::move(next);
  }
  std::vector<Integer> out;
  out.reserve(acc.size());
  for (const auto& c : acc) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace tristrip
