#include "tristrip/spectral.hpp"

#include "tristrip/errors.hpp"
#include "tristrip/falling_factorial.hpp"
#include "tristrip/kernels.hpp"

namespace tristrip {

namespace {

using QMat = Mat4<QuadExt>;

// lambda^4 + c[3] lambda^3 + c[2] lambda^2 + c[1] lambda + c[0]
// by Faddeev-LeVerrier.
std::array<Rational, 4> characteristic(const Mat4<Rational>& a) {
  std::array<Rational, 4> c;
  Mat4<Rational> mk{};  // M_0 = 0
  Rational prev = 1;    // c_4
  for (int k = 1; k <= 4; ++k) {
    Mat4<Rational> next{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        Rational s = 0;
        for (int t = 0; t < 4; ++t) s += a[i][t] * mk[t][j];
        next[i][j] = s + (i == j ? prev : Rational(0));
      }
    }
    Rational trace = 0;
    for (int i = 0; i < 4; ++i) {
      for (int t = 0; t < 4; ++t) trace += a[i][t] * next[t][i];
    }
    prev = -trace / k;
    c[4 - k] = prev;
    mk = next;
  }
  return c;
}

Rational canonical_helper(Rational r) {
  r.canonicalize();
  return r;
}

struct QuadraticFactor {
  Rational linear;
  Rational constant;
  Integer radicand{1};
  QuadExt upper{Integer(1)};
  QuadExt lower{Integer(1)};
};

QuadraticFactor quadratic_factor(const Mat4<Rational>& md) {
  const auto c = characteristic(md);
  if (sgn(c[0]) != 0) throw Error("MD(x) is not singular; unexpected spectrum");
  // divide lambda^3 + c3 lambda^2 + c2 lambda + c1 by (lambda - 2)
  QuadraticFactor f;
  f.linear = c[3] + 2;
  f.constant = c[2] + 2 * f.linear;
  if (sgn(c[1] + 2 * f.constant) != 0) throw Error("2 is not an eigenvalue of MD(x)");
  const Rational disc = f.linear * f.linear - 4 * f.constant;
  if (sgn(disc) < 0) throw Error("complex eigenvalues at this x");
  // sqrt(N/D) = sqrt(N D) / D = r sqrt(d) / D
  const Integer nd = disc.get_num() * disc.get_den();
  Integer r = 0;
  Integer d = 1;
  if (nd != 0) std::tie(r, d) = extract_square_factor(nd);
  f.radicand = d;
  const Rational half_root(r, 2 * disc.get_den());
  const Rational mid = -f.linear / 2;
  f.upper = QuadExt(mid, canonical_helper(half_root), d);
  f.lower = QuadExt(mid, -canonical_helper(half_root), d);
  return f;
}

Vec4<QuadExt> null_vector(QMat b) {
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  int row = 0;
  for (int col = 0; col < 4 && row < 4; ++col) {
    int p = -1;
    for (int r = row; r < 4; ++r) {
      if (!b[r][col].is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(b[row], b[p]);
    const QuadExt inv = b[row][col].inverse();
    for (auto& e : b[row]) e *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == row || b[r][col].is_zero()) continue;
      const QuadExt f = b[r][col];
      for (int k = 0; k < 4; ++k) b[r][k] -= f * b[row][k];
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != 3) throw Error("eigenspace is not one-dimensional");
  std::array<bool, 4> is_pivot{};
  for (int r = 0; r < 3; ++r) is_pivot[pivot_col[r]] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  const Integer& d = b[0][0].radicand();
  Vec4<QuadExt> v{QuadExt(d), QuadExt(d), QuadExt(d), QuadExt(d)};
  v[free_col] = QuadExt::rational(1, d);
  for (int r = 0; r < 3; ++r) v[pivot_col[r]] = -b[r][free_col];
  return v;
}

Vec4<QuadExt> eigenvector_for(const Mat4<Rational>& md, const QuadExt& lambda, int last_coordinate) {
  const Integer& d = lambda.radicand();
  QMat b;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      b[i][j] = QuadExt::rational(md[i][j], d);
      if (i == j) b[i][j] -= lambda;
    }
  }
  Vec4<QuadExt> v = null_vector(b);
  if (v[3].is_zero()) throw Error("eigenvector has zero last coordinate");
  const QuadExt scale = QuadExt::rational(last_coordinate, d) / v[3];
  for (auto& e : v) e *= scale;
  return v;
}

}  // namespace

Rational eigen_guard_low() { return Rational(181, 50); }

QuadExt EigenSystem::eigenvalue(int i) const {
  switch (i) {
    case 1: return QuadExt::rational(lambda1, radicand);
    case 2: return lambda2;
    case 3: return lambda3;
    case 4: return QuadExt::rational(lambda4, radicand);
  }
  throw std::out_of_range("eigen index must be 1..4");
}

Vec4<QuadExt> EigenSystem::eigenvector(int i) const {
  switch (i) {
    case 1: return embed(v1, radicand);
    case 2: return v2;
    case 3: return v3;
    case 4: return embed(v4, radicand);
  }
  throw std::out_of_range("eigen index must be 1..4");
}

Vec4<QuadExt> embed(const Vec4<Rational>& v, const Integer& radicand) {
  return {QuadExt::rational(v[0], radicand), QuadExt::rational(v[1], radicand), QuadExt::rational(v[2], radicand),
          QuadExt::rational(v[3], radicand)};
}

Vec4<QuadExt> embed(const Vec4<Integer>& v, const Integer& radicand) {
  return embed(Vec4<Rational>{Rational(v[0]), Rational(v[1]), Rational(v[2]), Rational(v[3])}, radicand);
}

QuadExt d_inner(const Vec4<QuadExt>& v, const Vec4<Rational>& d, const Vec4<QuadExt>& w) {
  QuadExt s(v[0].radicand());
  for (int i = 0; i < 4; ++i) s += v[i] * w[i] * d[i];
  return s;
}

std::pair<QuadExt, QuadExt> eigenvalues_at(const Rational& x) {
  if (x < eigen_guard_low() || x > 4) throw GuardViolation("x must lie in [181/50, 4]");
  const QuadraticFactor f = quadratic_factor(md_at(x).entries);
  return {f.upper, f.lower};
}

EigenSystem eigensystem_at(const Rational& x) {
  if (x < eigen_guard_low() || x >= 4) throw GuardViolation("x must lie in [181/50, 4)");
  const Mat4<Rational> md = md_at(x).entries;
  const QuadraticFactor f = quadratic_factor(md);
  if (f.upper == f.lower) throw Error("repeated eigenvalue at x = " + to_string(x));
  EigenSystem es;
  es.x = x;
  es.radicand = f.radicand;
  es.q_linear = f.linear;
  es.q_constant = f.constant;
  es.lambda2 = f.upper;
  es.lambda3 = f.lower;
  es.v2 = eigenvector_for(md, es.lambda2, -1);
  es.v3 = eigenvector_for(md, es.lambda3, +1);
  es.d_diag = d_at(x);
  return es;
}

OrthogonalityReport orthogonality_check(const EigenSystem& es) {
  OrthogonalityReport r;
  r.pass = true;
  std::array<Vec4<QuadExt>, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = es.eigenvector(i + 1);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      r.gram[i][j] = d_inner(v[i], es.d_diag, v[j]);
      const bool ok = i == j ? r.gram[i][j].sign() > 0 : r.gram[i][j].is_zero();
      r.pass = r.pass && ok;
    }
  }
  return r;
}

Decomposition decompose(const PartitionVector& q, const EigenSystem& es) {
  const Vec4<QuadExt> qx = embed(q.evaluate(es.x), es.radicand);
  Decomposition out;
  Vec4<QuadExt> rebuilt{QuadExt(es.radicand), QuadExt(es.radicand), QuadExt(es.radicand), QuadExt(es.radicand)};
  for (int i = 0; i < 4; ++i) {
    const Vec4<QuadExt> v = es.eigenvector(i + 1);
    out.weighted[i] = d_inner(qx, es.d_diag, v);
    out.alpha[i] = out.weighted[i] / d_inner(v, es.d_diag, v);
    for (int k = 0; k < 4; ++k) rebuilt[k] += out.alpha[i] * v[k];
  }
  out.reconstructs = rebuilt == qx;
  return out;
}

bool planar_face_identity(const PartitionVector& q) {
  const IntPolynomial ff2 = falling_factorial(2);
  const IntPolynomial ff3 = falling_factorial(3);
  const IntPolynomial ff4 = falling_factorial(4);
  return ff3 * ff4 * q.p[0] + ff2 * ff3 * q.p[3] == ff2 * ff4 * (q.p[1] + q.p[2]);
}

Rational four_colour_constant(const PartitionVector& q) {
  Rational c(q.p[0].evaluate(Integer(4)) * 5, 24);
  c.canonicalize();
  return c;
}

Rational limit_projection_at_four(const PartitionVector& q) {
  const auto qx = q.evaluate(Rational(4));
  const auto d = d_at(Rational(4));
  const Vec4<Rational> v2{Rational(3, 2), 1, 1, -1};
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += qx[i] * d[i] * v2[i];
  return s;
}

const char* to_string(EndClass c) {
  switch (c) {
    case EndClass::positive: return "positive";
    case EndClass::negative: return "negative";
    case EndClass::inconclusive: return "inconclusive";
  }
  return "?";
}

Classification classify_end_graph(const PartitionVector& q, const ClassifyOptions& options) {
  Classification out;
  out.fast_path_constant = four_colour_constant(q);
  if (sgn(out.fast_path_constant) > 0) {
    out.verdict = EndClass::positive;
    out.decided_by_fast_path = true;
    if (!options.always_sweep) return out;
  }

  std::vector<Rational> points;
  for (int k = options.first_k; k <= options.last_k; ++k) points.push_back(4 - power_of_two(-k));
  const kernels::SignProbe probe = [&q](const Rational& x) {
    const EigenSystem es = eigensystem_at(x);
    const Vec4<QuadExt> qx = embed(q.evaluate(x), es.radicand);
    return d_inner(qx, es.d_diag, es.v2).sign();
  };
  const std::vector<int> signs =
      options.parallel ? kernels::parallel::sign_sweep(points, probe) : kernels::serial::sign_sweep(points, probe);

  int run = 0;
  int run_sign = 0;
  EndClass swept = EndClass::inconclusive;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    out.trace.emplace_back(options.first_k + static_cast<int>(i), signs[i]);
    if (swept != EndClass::inconclusive) continue;
    if (signs[i] != 0 && signs[i] == run_sign) {
      ++run;
    } else {
      run = signs[i] != 0 ? 1 : 0;
      run_sign = signs[i];
    }
    if (run >= options.agreement) swept = run_sign > 0 ? EndClass::positive : EndClass::negative;
  }
  if (!out.decided_by_fast_path) out.verdict = swept;
  return out;
}

bool predict_roots_to_four(const PartitionVector& qa, const PartitionVector& qb, const ClassifyOptions& options) {
  const EndClass a = classify_end_graph(qa, options).verdict;
  const EndClass b = classify_end_graph(qb, options).verdict;
  if (a == EndClass::inconclusive || b == EndClass::inconclusive) {
    throw InconclusiveClassification("cannot predict: an end-graph classifies as inconclusive");
  }
  return a != b;
}

}  // namespace tristrip
