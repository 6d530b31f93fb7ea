#pragma once

#include <array>

#include "tristrip/partition.hpp"
#include "tristrip/polynomial.hpp"
#include "tristrip/quad_ext.hpp"

namespace tristrip {

template <class T>
using Vec4 = std::array<T, 4>;
template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

enum class MatrixKind { M, MD, MD_power };

struct TransferMatrix {
  MatrixKind kind = MatrixKind::M;
  unsigned long power = 1;
  Mat4<IntPolynomial> entries;
};

struct EvaluatedTransferMatrix {
  MatrixKind kind = MatrixKind::MD;
  unsigned long power = 1;
  Rational x;
  Mat4<Rational> entries;
};

// Number of frame colours for each type; D = diag(1/ff_s).
inline constexpr std::array<unsigned, 4> kFrameColours{2, 3, 3, 4};

// ff_2, ff_3, ff_3, ff_4.
const std::array<IntPolynomial, 4>& d_denominators();
// The diagonal of D(x). Throws SingularDError for x in {0, 1, 2, 3}.
Vec4<Rational> d_at(const Rational& x);

// Counts of colourings of the gadget by (type on outer cycle, type on inner
// cycle), built from falling-factorial combinations.
const TransferMatrix& build_M();
// M with column j divided exactly by ff_{s_j}.
const TransferMatrix& build_MD();
TransferMatrix symbolic_power(const TransferMatrix& md, unsigned long k);
PartitionVector apply(const TransferMatrix& m, const PartitionVector& q);

EvaluatedTransferMatrix evaluate(const TransferMatrix& m, const Rational& x);
EvaluatedTransferMatrix md_at(const Rational& x);
// Binary exponentiation over a common integer denominator.
EvaluatedTransferMatrix power(const EvaluatedTransferMatrix& m, unsigned long k);

// Q(A)^T D Q(B): chromatic polynomial of A and B glued along their frames.
// Throws NonExactDivision if the inputs are not partition vectors of graphs.
IntPolynomial glue(const PartitionVector& qa, const PartitionVector& qb);
// Q(A') = M D Q(A).
PartitionVector extend_one_layer(const PartitionVector& q);

inline constexpr unsigned long kDefaultMaxSymbolicN = 128;

// Q(A)^T D (MD)^(n-1) Q(B). Symbolic only up to `max_symbolic_n`; beyond it
// callers use family_value_at.
IntPolynomial family_polynomial(const PartitionVector& qa, const PartitionVector& qb, unsigned long n,
                                unsigned long max_symbolic_n = kDefaultMaxSymbolicN);
Rational family_value_at(const PartitionVector& qa, const PartitionVector& qb, unsigned long n, const Rational& x);

struct GoldenCheck {
  bool pass = false;
  long exponent = 0;
  QuadExt lhs{Integer(5)};
  QuadExt rhs{Integer(5)};
  QuadExt residual{Integer(5)};
};

// P(tau+2) == (tau+2) tau^(3n-10) P(tau+1)^2, exactly in Q(sqrt 5).
GoldenCheck golden_identity_check(const IntPolynomial& p, int n_vertices);

struct MOracleReport {
  Mat4<bool> match{};
  Mat4<IntPolynomial> interpolated;
  // counts[x][i][j] for x = 0..9
  std::vector<Mat4<std::uint64_t>> counts;
  bool all_pass = false;
};

// Enumerates colourings of the gadget at x = 0..9, interpolates each entry and
// compares it with build_M().
MOracleReport verify_M_against_oracle(bool use_parallel_kernel = true);

}  // namespace tristrip
