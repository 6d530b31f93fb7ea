#include "doctest.h"
#include "oracles/partition_oracle.hpp"
#include "support.hpp"
#include "tristrip/chromatic.hpp"
#include "tristrip/errors.hpp"
#include "tristrip/falling_factorial.hpp"
#include "tristrip/kernels.hpp"
#include "tristrip/transfer.hpp"

using namespace tristrip;

namespace {

IntPolynomial ff(std::initializer_list<std::pair<const unsigned, long>> terms) { return ff_to_power(ff_combo(terms)); }

}  // namespace

TEST_SUITE("transfer") {

TEST_CASE("M has the expected falling-factorial entries") {
  const auto& m = build_M().entries;
  const IntPolynomial middle = ff({{4, 1}, {5, 2}, {6, 1}});
  const IntPolynomial edge = ff({{5, 4}, {6, 4}, {7, 1}});
  CHECK(m[0][0] == ff({{4, 1}}));
  CHECK(m[0][1] == ff({{5, 1}}));
  CHECK(m[0][2] == ff({{5, 1}}));
  CHECK(m[0][3] == ff({{6, 1}}));
  for (int i : {1, 2}) {
    CHECK(m[i][0] == ff({{5, 1}}));
    CHECK(m[i][1] == middle);
    CHECK(m[i][2] == middle);
    CHECK(m[i][3] == edge);
    CHECK(m[3][i] == edge);
  }
  CHECK(m[3][0] == ff({{6, 1}}));
  CHECK(m[3][3] == ff({{4, 2}, {5, 16}, {6, 20}, {7, 8}, {8, 1}}));
}

TEST_CASE("M agrees with brute-force colourings of the gadget") {
  MOracleReport report = verify_M_against_oracle();
  CHECK(report.all_pass);
  MOracleReport serial = verify_M_against_oracle(false);
  CHECK(serial.counts == report.counts);
}

TEST_CASE("columns of M divide by the frame factorials and MD has degree at most 4") {
  const auto& m = build_M().entries;
  const auto& md = build_MD().entries;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(m[i][j].divide_exact(d_denominators()[j]) == md[i][j]);
      CHECK(md[i][j].degree() <= 4);
    }
  }
}

TEST_CASE("MD fixes v1 up to the factor 2 and kills v4") {
  const auto& md = build_MD().entries;
  const std::array<long, 4> v1{1, -1, -1, 1};
  const std::array<long, 4> v4{0, 1, -1, 0};
  for (int i = 0; i < 4; ++i) {
    IntPolynomial a, b;
    for (int j = 0; j < 4; ++j) {
      a = a + md[i][j] * Integer(v1[j]);
      b = b + md[i][j] * Integer(v4[j]);
    }
    CHECK(a == IntPolynomial::constant(Integer(2 * v1[i])));
    CHECK(b.is_zero());
  }
}

TEST_CASE("D is singular exactly at 0..3") {
  for (int x = 0; x <= 3; ++x) CHECK_THROWS_AS(d_at(Rational(x)), SingularDError);
  auto d = d_at(Rational(4));
  CHECK(d[0] == Rational(1, 12));
  CHECK(d[1] == Rational(1, 24));
  CHECK(d[3] == Rational(1, 24));
}

TEST_CASE("glue is symmetric and matches the glued graph") {
  for (const char* a : {"W4", "H", "neg10"}) {
    for (const char* b : {"W4", "neg10"}) {
      CAPTURE(a);
      CAPTURE(b);
      const auto& qa = testing::q_of(a);
      const auto& qb = testing::q_of(b);
      CHECK(glue(qa, qb) == glue(qb, qa));
      CHECK(glue(qa, qb) == chromatic_polynomial(glue_graphs(testing::fixture(a), testing::fixture(b))));
    }
  }
}

TEST_CASE("one extension equals partitioning the layered graph") {
  for (const char* name : {"W4", "neg10"}) {
    FramedGraph layered = add_layer(testing::fixture(name));
    CHECK(extend_one_layer(testing::q_of(name)) == oracle::partitioned(layered));
  }
}

TEST_CASE("family polynomial equals the explicit strip graph") {
  const auto& h = testing::q_of("H");
  const auto& w4 = testing::q_of("W4");
  const auto& f7 = testing::q_of("neg10");
  // 17 vertices; the subset oracle shares no code with either side.
  CHECK(family_polynomial(h, w4, 1) == oracle::chromatic(strip_graph(testing::fixture("H"), testing::fixture("W4"), 1)));
  for (int n = 1; n <= 3; ++n) {
    CHECK(family_polynomial(w4, f7, n) ==
          chromatic_polynomial(strip_graph(testing::fixture("W4"), testing::fixture("neg10"), n)));
  }
}

TEST_CASE("family values at 4 agree with colouring counts") {
  const auto& h = testing::q_of("H");
  const auto& w4 = testing::q_of("W4");
  // Backtracking 4-colouring counts of X_{H,W4}(n), frozen.
  const std::array<long, 3> counts{432, 864, 1728};
  for (int n = 1; n <= 3; ++n) {
    CHECK(family_value_at(h, w4, n, Rational(4)) == counts[n - 1]);
    CHECK(family_polynomial(h, w4, n).evaluate(Integer(4)) == counts[n - 1]);
    Graph x = strip_graph(testing::fixture("H"), testing::fixture("W4"), n);
    CHECK(kernels::serial::count_colourings(x, 4) == static_cast<kernels::Count>(counts[n - 1]));
  }
}

TEST_CASE("degree law and pointwise consistency") {
  const auto& h = testing::q_of("H");
  const auto& w4 = testing::q_of("W4");
  for (unsigned long n = 1; n <= 12; ++n) {
    IntPolynomial p = family_polynomial(h, w4, n);
    CHECK(p.degree() == static_cast<int>(4 * n + 13));
    CHECK(p.leading() == 1);
    for (const Rational& x : {Rational(399, 100), Rational(7, 2), Rational(-5, 3), Rational(10)}) {
      CHECK(family_value_at(h, w4, n, x) == p.evaluate(x));
    }
  }
  CHECK_THROWS_AS(family_polynomial(h, w4, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_polynomial(h, w4, 200), ResourceLimitError);
}

TEST_CASE("evaluated powers agree with symbolic powers and repeated products") {
  const Rational x(31, 8);
  EvaluatedTransferMatrix md = md_at(x);
  for (unsigned long k : {1UL, 2UL, 5UL, 16UL}) {
    EvaluatedTransferMatrix fast = power(md, k);
    TransferMatrix symbolic = symbolic_power(build_MD(), k);
    CHECK(fast.entries == evaluate(symbolic, x).entries);
  }
  EvaluatedTransferMatrix slow = md;
  for (int i = 1; i < 7; ++i) {
    Mat4<Rational> next{};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        for (int k = 0; k < 4; ++k) next[r][c] += slow.entries[r][k] * md.entries[k][c];
      }
    }
    slow.entries = next;
  }
  CHECK(power(md, 7).entries == slow.entries);
}

TEST_CASE("golden identity holds for the H, W4 family") {
  const auto& h = testing::q_of("H");
  const auto& w4 = testing::q_of("W4");
  for (int n = 1; n <= 4; ++n) {
    GoldenCheck g = golden_identity_check(family_polynomial(h, w4, n), 4 * n + 13);
    CHECK(g.pass);
    CHECK(g.exponent == 3 * (4 * n + 13) - 10);
  }
  // A non-planar graph fails it: K5 has no planar triangulation structure.
  Graph k5(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  }
  CHECK_FALSE(golden_identity_check(chromatic_polynomial(k5), 5).pass);
}

}  // TEST_SUITE
