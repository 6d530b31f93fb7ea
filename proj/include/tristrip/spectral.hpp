#pragma once

#include <utility>
#include <vector>

#include "tristrip/partition.hpp"
#include "tristrip/quad_ext.hpp"
#include "tristrip/transfer.hpp"

namespace tristrip {

// Lower end of the admissible interval for x = 4 - eps; a rational just above
// 2 + tau.
Rational eigen_guard_low();

// Eigen-decomposition of MD(x) for fixed rational x in [181/50, 4).
//
// The characteristic polynomial factors as lambda (lambda - 2) q(lambda);
// lambda2 > lambda3 are the roots of q in Q(sqrt d). v2 is scaled so its last
// coordinate is -1, v3 so its last coordinate is +1.
struct EigenSystem {
  Rational x;
  Integer radicand{1};
  // q(lambda) = lambda^2 + q_linear lambda + q_constant
  Rational q_linear;
  Rational q_constant;
  Rational lambda1{2};
  Rational lambda4{0};
  QuadExt lambda2{Integer(1)};
  QuadExt lambda3{Integer(1)};
  Vec4<Integer> v1{1, -1, -1, 1};
  Vec4<Integer> v4{0, 1, -1, 0};
  Vec4<QuadExt> v2;
  Vec4<QuadExt> v3;
  Vec4<Rational> d_diag;

  // 1-based, embedded in Q(sqrt d).
  QuadExt eigenvalue(int i) const;
  Vec4<QuadExt> eigenvector(int i) const;
};

// Throws GuardViolation outside [181/50, 4) and Error if the spectrum is not
// of the expected shape.
EigenSystem eigensystem_at(const Rational& x);

// lambda2 >= lambda3 only; also admits x = 4, where both equal 2.
std::pair<QuadExt, QuadExt> eigenvalues_at(const Rational& x);

Vec4<QuadExt> embed(const Vec4<Rational>& v, const Integer& radicand);
Vec4<QuadExt> embed(const Vec4<Integer>& v, const Integer& radicand);
// v^T D(x) w
QuadExt d_inner(const Vec4<QuadExt>& v, const Vec4<Rational>& d, const Vec4<QuadExt>& w);

struct OrthogonalityReport {
  Mat4<QuadExt> gram;  // v_i^T D v_j, zero-based
  bool pass = false;
};

// Zero off the diagonal, strictly positive on it.
OrthogonalityReport orthogonality_check(const EigenSystem& es);

struct Decomposition {
  Vec4<QuadExt> alpha;      // Q(x) = sum alpha_i v_i
  Vec4<QuadExt> weighted;   // Q(x)^T D v_i = alpha_i |v_i|^2
  bool reconstructs = false;
};

Decomposition decompose(const PartitionVector& q, const EigenSystem& es);

// ff3 ff4 P1 + ff2 ff3 P4 == ff2 ff4 (P2 + P3), i.e. Q^T D v1 = 0.
bool planar_face_identity(const PartitionVector& q);

// (5/24) P1(4): the eps -> 0 limit of Q^T D v2.
Rational four_colour_constant(const PartitionVector& q);
// Q(4)^T D(4) (3/2, 1, 1, -1).
Rational limit_projection_at_four(const PartitionVector& q);

enum class EndClass { positive, negative, inconclusive };
const char* to_string(EndClass c);

struct ClassifyOptions {
  int first_k = 4;
  int last_k = 40;
  int agreement = 8;
  // Run the sweep even when the constant term already decides the sign.
  bool always_sweep = false;
  bool parallel = true;
};

struct Classification {
  EndClass verdict = EndClass::inconclusive;
  Rational fast_path_constant;
  bool decided_by_fast_path = false;
  // (k, sign of Q^T D v2 at x = 4 - 2^-k)
  std::vector<std::pair<int, int>> trace;
};

// Sign of the leading eps-term of Q(x)^T D(x) v2(x) at x = 4 - eps.
Classification classify_end_graph(const PartitionVector& q, const ClassifyOptions& options = {});

// True iff exactly one end is positive. Throws InconclusiveClassification
// when either end cannot be classified.
bool predict_roots_to_four(const PartitionVector& qa, const PartitionVector& qb,
                           const ClassifyOptions& options = {});

}  // namespace tristrip
