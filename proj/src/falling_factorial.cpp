#include "tristrip/falling_factorial.hpp"

#include <sstream>
#include <vector>

namespace tristrip {

namespace {

constexpr unsigned kMemoRows = 64;

using Triangle = std::vector<std::vector<Integer>>;

// s(n+1,k) = s(n,k-1) - n s(n,k)
Triangle first_kind_rows(unsigned rows) {
  Triangle t(rows + 1);
  t[0] = {Integer(1)};
  for (unsigned n = 0; n < rows; ++n) {
    auto& next = t[n + 1];
    next.assign(n + 2, Integer(0));
    for (unsigned k = 0; k <= n; ++k) {
      next[k + 1] += t[n][k];
      next[k] -= t[n][k] * n;
    }
  }
  return t;
}

// S(n+1,k) = k S(n,k) + S(n,k-1)
Triangle second_kind_rows(unsigned rows) {
  Triangle t(rows + 1);
  t[0] = {Integer(1)};
  for (unsigned n = 0; n < rows; ++n) {
    auto& next = t[n + 1];
    next.assign(n + 2, Integer(0));
    for (unsigned k = 0; k <= n; ++k) {
      next[k + 1] += t[n][k];
      next[k] += t[n][k] * k;
    }
  }
  return t;
}

const Triangle& memo_first() {
  static const Triangle t = first_kind_rows(kMemoRows);
  return t;
}

const Triangle& memo_second() {
  static const Triangle t = second_kind_rows(kMemoRows);
  return t;
}

Integer lookup(const Triangle& memo, Triangle (*build)(unsigned), unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n <= kMemoRows) return memo[n][k];
  return build(n)[n][k];
}

}  // namespace

void FallingFactorialCombo::normalize() {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

Integer stirling_first(unsigned n, unsigned k) { return lookup(memo_first(), first_kind_rows, n, k); }

Integer stirling_second(unsigned n, unsigned k) { return lookup(memo_second(), second_kind_rows, n, k); }

IntPolynomial falling_factorial(unsigned k) {
  if (k <= kMemoRows) return IntPolynomial(memo_first()[k]);
  return IntPolynomial(first_kind_rows(k)[k]);
}

IntPolynomial ff_to_power(const FallingFactorialCombo& combo) {
  IntPolynomial out;
  for (const auto& [k, mult] : combo.terms) {
    if (mult != 0) out += falling_factorial(k) * mult;
  }
  return out;
}

FallingFactorialCombo power_to_ff(const IntPolynomial& p) {
  FallingFactorialCombo out;
  const unsigned deg = p.degree() < 0 ? 0 : static_cast<unsigned>(p.degree());
  Triangle big;
  if (deg > kMemoRows) big = second_kind_rows(deg);
  const Triangle& s2 = deg > kMemoRows ? big : memo_second();
  auto coeffs = p.coefficients();
  for (unsigned n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] == 0) continue;
    for (unsigned k = 0; k <= n; ++k) {
      if (s2[n][k] != 0) out.terms[k] += coeffs[n] * s2[n][k];
    }
  }
  out.normalize();
  return out;
}

FallingFactorialCombo ff_combo(std::initializer_list<std::pair<const unsigned, long>> terms) {
  FallingFactorialCombo c;
  for (const auto& [k, m] : terms) c.terms[k] += m;
  c.normalize();
  return c;
}

std::string to_string(const FallingFactorialCombo& combo) {
  if (combo.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : combo.terms) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    first = false;
    Integer mag = abs(m);
    if (mag != 1) os << mag.get_str() << "*";
    os << "ff" << k;
  }
  return os.str();
}

}  // namespace tristrip
