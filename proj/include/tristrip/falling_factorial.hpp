#pragma once

#include <map>
#include <string>

#include "tristrip/numeric.hpp"
#include "tristrip/polynomial.hpp"

namespace tristrip {

// Integer combination sum_k mult_k * ff_k, where ff_k = x(x-1)...(x-k+1).
struct FallingFactorialCombo {
  std::map<unsigned, Integer> terms;

  // Drops zero multiplicities.
  void normalize();
  friend bool operator==(const FallingFactorialCombo&, const FallingFactorialCombo&) = default;
};

// ff_k in the power basis.
IntPolynomial falling_factorial(unsigned k);

// Signed Stirling numbers of the first kind s(n, k): ff_n = sum_k s(n,k) x^k.
Integer stirling_first(unsigned n, unsigned k);
// Stirling numbers of the second kind S(n, k): x^n = sum_k S(n,k) ff_k.
Integer stirling_second(unsigned n, unsigned k);

IntPolynomial ff_to_power(const FallingFactorialCombo& combo);
FallingFactorialCombo power_to_ff(const IntPolynomial& p);

// Shorthand for building combos in code: ff_combo({{4, 2}, {5, 16}}).
FallingFactorialCombo ff_combo(std::initializer_list<std::pair<const unsigned, long>> terms);

std::string to_string(const FallingFactorialCombo& combo);

}  // namespace tristrip
