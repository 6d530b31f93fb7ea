#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tristrip/errors.hpp"
#include "tristrip/spectral.hpp"

using namespace tristrip;

namespace {

Rational random_x(std::mt19937_64& rng) {
  // (3.62, 3.999) on a grid of 1/10^6 with random extra denominators.
  std::uniform_int_distribution<long> num(3620001, 3998999);
  std::uniform_int_distribution<long> den(1, 97);
  long d = den(rng);
  Rational x(num(rng) * d, 1000000L * d + 1);
  x.canonicalize();
  return x;
}

QuadExt lift(const Rational& r, const Integer& d) { return QuadExt::rational(r, d); }

// |value - approx| / scale as a double; value is exact, so the subtraction is too.
double scaled_error(const QuadExt& value, const Rational& approx, const Rational& scale) {
  QuadExt diff = value - lift(approx, value.radicand());
  return std::abs(diff.to_double()) / scale.get_d();
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("eigenpairs are exact at random rational points") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Rational x = random_x(rng);
    CAPTURE(x.get_str());
    EigenSystem es = eigensystem_at(x);
    EvaluatedTransferMatrix md = md_at(x);
    for (int i = 1; i <= 4; ++i) {
      Vec4<QuadExt> v = es.eigenvector(i);
      QuadExt lambda = es.eigenvalue(i);
      for (int r = 0; r < 4; ++r) {
        QuadExt row(es.radicand);
        for (int c = 0; c < 4; ++c) row += v[c] * md.entries[r][c];
        CHECK(row == lambda * v[r]);
      }
    }
    CHECK((es.lambda2 - es.lambda3).sign() == 1);
    CHECK((es.lambda3).sign() == 1);
    CHECK((lift(Rational(2), es.radicand) - es.lambda2).sign() == 1);
    CHECK(es.v2[3] == lift(Rational(-1), es.radicand));
    CHECK(es.v3[3] == lift(Rational(1), es.radicand));
    OrthogonalityReport orth = orthogonality_check(es);
    CHECK(orth.pass);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == j)
          CHECK(orth.gram[i][j].sign() == 1);
        else
          CHECK(orth.gram[i][j].is_zero());
      }
    }
  }
}

TEST_CASE("guard range") {
  CHECK_THROWS_AS(eigensystem_at(Rational(4)), GuardViolation);
  CHECK_THROWS_AS(eigensystem_at(Rational(7, 2)), GuardViolation);
  CHECK_THROWS_AS(eigensystem_at(Rational(5)), GuardViolation);
  CHECK_NOTHROW(eigensystem_at(Rational(181, 50)));
  CHECK(eigen_guard_low() <= Rational(181, 50));
  // At 4 both eigenvalues collapse to 2.
  auto [l2, l3] = eigenvalues_at(Rational(4));
  CHECK(l2 == QuadExt::rational(2, l2.radicand()));
  CHECK(l3 == QuadExt::rational(2, l3.radicand()));
}

TEST_CASE("eigenvalues follow their small-eps series") {
  // Third-order coefficients come from an independent symbolic expansion of
  // the quadratic factor.
  double worst2 = 0, worst3 = 0;
  for (int k = 4; k <= 10; ++k) {
    Rational eps = power_of_two(-k);
    auto [l2, l3] = eigenvalues_at(4 - eps);
    Rational e2 = eps * eps, e3 = e2 * eps;
    Rational s2 = 2 - 5 * eps + Rational(10, 3) * e2;
    Rational s3 = 2 - 8 * eps + Rational(26, 3) * e2;
    worst2 = std::max(worst2, scaled_error(l2, s2, e3));
    worst3 = std::max(worst3, scaled_error(l3, s3, e3));
    CHECK(scaled_error(l2, s2 + Rational(8, 27) * e3, e3 * eps) <= 100);
    CHECK(scaled_error(l3, s3 - Rational(116, 27) * e3, e3 * eps) <= 100);
  }
  CHECK(worst2 <= 100);
  CHECK(worst3 <= 100);
  CHECK(worst2 == doctest::Approx(8.0 / 27).epsilon(0.05));
  CHECK(worst3 == doctest::Approx(116.0 / 27).epsilon(0.05));
}

TEST_CASE("planar faces give alpha1 = 0") {
  for (const char* name : {"H", "W4", "L", "neg10"}) {
    CAPTURE(name);
    const PartitionVector& q = testing::q_of(name);
    CHECK(planar_face_identity(q));
    Decomposition dec = decompose(q, eigensystem_at(Rational(39, 10)));
    CHECK(dec.reconstructs);
    CHECK(dec.alpha[0].is_zero());
    CHECK(dec.weighted[0].is_zero());
  }
  // A frame that is not a face: K5 minus an edge, framed on a 4-cycle through
  // the fifth vertex's neighbours. Both diagonals present rules out types 1-3.
  FramedGraph k{Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}), {0, 1, 2, 3}};
  CHECK_FALSE(planar_face_identity(partitioned_chromatic(k)));
}

TEST_CASE("weighted coefficients at eps = 1/100 follow their linear terms") {
  Rational eps(1, 100);
  EigenSystem es = eigensystem_at(4 - eps);
  Decomposition h = decompose(testing::q_of("H"), es);
  Decomposition w4 = decompose(testing::q_of("W4"), es);
  // Exact expansions to second order: -50 eps + 925/3 eps^2 and
  // 5 + 20/3 eps + 277/27 eps^2.
  Rational e2 = eps * eps;
  CHECK(scaled_error(h.weighted[1], -50 * eps + Rational(925, 3) * e2, e2 * eps) <= 1e4);
  CHECK(scaled_error(w4.weighted[1], 5 + Rational(20, 3) * eps + Rational(277, 27) * e2, e2 * eps) <= 1e4);
  CHECK(h.weighted[1].sign() == -1);
  CHECK(w4.weighted[1].sign() == 1);
}

TEST_CASE("classification of the fixtures") {
  CHECK(classify_end_graph(testing::q_of("W4")).verdict == EndClass::positive);
  CHECK(classify_end_graph(testing::q_of("H")).verdict == EndClass::negative);
  CHECK(classify_end_graph(testing::q_of("neg10")).verdict == EndClass::negative);
  ClassifyOptions sweep;
  sweep.always_sweep = true;
  Classification h = classify_end_graph(testing::q_of("H"), sweep);
  CHECK(h.verdict == EndClass::negative);
  CHECK_FALSE(h.decided_by_fast_path);
  CHECK_FALSE(h.trace.empty());
  for (const auto& [k, s] : h.trace) CHECK(s == -1);
  sweep.parallel = false;
  CHECK(classify_end_graph(testing::q_of("H"), sweep).trace == h.trace);

  CHECK(four_colour_constant(testing::q_of("W4")) == 5);
  CHECK(four_colour_constant(testing::q_of("H")) == 0);
  CHECK(classify_end_graph(testing::q_of("W4")).decided_by_fast_path);

  CHECK(predict_roots_to_four(testing::q_of("H"), testing::q_of("W4")));
  CHECK_FALSE(predict_roots_to_four(testing::q_of("W4"), testing::q_of("W4")));
  CHECK_FALSE(predict_roots_to_four(testing::q_of("H"), testing::q_of("neg10")));
}

TEST_CASE("classification ignores labelling and frame direction") {
  std::mt19937_64 rng(8);
  for (const char* name : {"W4", "neg10"}) {
    FramedGraph fg = testing::fixture(name);
    EndClass expected = classify_end_graph(testing::q_of(name)).verdict;
    for (int trial = 0; trial < 3; ++trial) {
      FramedGraph shuffled = testing::shuffle_framed(fg, rng);
      CHECK(classify_end_graph(partitioned_chromatic(shuffled)).verdict == expected);
    }
    CHECK(classify_end_graph(partitioned_chromatic(reverse_frame(fg))).verdict == expected);
  }
}

}  // TEST_SUITE
