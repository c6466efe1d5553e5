#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "waring/binary.hpp"
#include "waring/decomp.hpp"

using namespace waring;
using C = Cyclotomic;

namespace {

C q(long n, long d = 1) { return C(Rational(n, d)); }

Point pt(C a, C b, C c) { return Point{a, b, c}; }

// Oracle: l^d by repeated multiplication of the linear form.
Form naive_power(const Point& p, int d) {
  const int n = p.nvars();
  Form l(n, 1);
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    l.add_term(e, p[i]);
  }
  Form out = Form::monomial(Exponent(static_cast<std::size_t>(n), 0), C(1));
  for (int i = 0; i < d; ++i) out = out * l;
  return out;
}

Form naive_sum(const Points& x, const std::vector<C>& c, int d) {
  Form out(x.nvars(), d);
  for (Index i = 0; i < x.size(); ++i) out += naive_power(x[i], d) * c[static_cast<std::size_t>(i)];
  return out;
}

long multinomial_kkk(int n, int k) {
  long v = factorial((n + 1) * k);
  for (int i = 0; i <= n; ++i) v /= factorial(k);
  return v;
}

// lambda_0 for (x_0...x_n)^k and l = (a_0,...,a_n): the coefficient of the
// point itself is 1 / ((k+1)^n * ((n+1)k)!/(k!)^(n+1) * (a_0...a_n)^k).
C lambda0_oracle(int n, int k, const Point& ell) {
  C prod(1);
  for (int i = 0; i <= n; ++i) prod = prod * ell[i];
  long m = multinomial_kkk(n, k);
  for (int i = 0; i < n; ++i) m *= (k + 1);
  return -(C(1) / (C(m) * pow(prod, k)));
}

Form permute(const Form& f, const std::vector<int>& perm) {
  Form out(f.nvars(), f.degree());
  for (const auto& [e, c] : f.terms()) {
    Exponent g(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) g[static_cast<std::size_t>(perm[i])] = e[i];
    out.add_term(g, c);
  }
  return out;
}

Point permute(const Point& p, const std::vector<int>& perm) {
  Vector<C> v(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) v(perm[static_cast<std::size_t>(i)]) = p[i];
  return Point(v);
}

// f(s_0 x_0, s_1 x_1, s_2 x_2).
Form scale(const Form& f, const std::vector<C>& s) {
  Form out(f.nvars(), f.degree());
  for (const auto& [e, c] : f.terms()) {
    C v = c;
    for (std::size_t i = 0; i < e.size(); ++i) v = v * pow(s[i], e[i]);
    out.add_term(e, v);
  }
  return out;
}

Point scale(const Point& p, const std::vector<C>& s) {
  Vector<C> v(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) v(i) = p[i] * s[static_cast<std::size_t>(i)];
  return Point(v);
}

}  // namespace

TEST(SolveCoefficients, XyzIdentity) {
  const Points x(std::vector<Point>{pt(1, 1, 1), pt(1, 1, -1), pt(1, -1, 1), pt(1, -1, -1)});
  const auto dec = solve_coefficients(monomial_product(2, 1), x);
  EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
  EXPECT_EQ(dec.kernel_dim, 0);
  const std::vector<C> expect{q(1, 24), q(-1, 24), q(-1, 24), q(1, 24)};
  EXPECT_EQ(dec.coeffs, expect);
  EXPECT_EQ(naive_sum(x, expect, 3), monomial_product(2, 1));
}

TEST(SolveCoefficients, SinglePower) {
  for (int d = 1; d <= 6; ++d) {
    const Form f = Form::monomial({d, 0, 0}, C(1));
    const auto dec = solve_coefficients(f, Points(std::vector<Point>{pt(1, 0, 0)}));
    ASSERT_EQ(dec.coeffs.size(), 1u);
    EXPECT_EQ(dec.coeffs[0], C(1));
  }
}

TEST(SolveCoefficients, NotInSpanCertificate) {
  const Form f = Form::monomial({3, 0, 0}, C(1));
  const Points x(std::vector<Point>{pt(0, 1, 0), pt(0, 0, 1)});
  try {
    solve_coefficients(f, x);
    FAIL() << "expected NotInSpan";
  } catch (const NotInSpanError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInSpan);
    const Form& d = e.certificate();
    EXPECT_EQ(d.degree(), 3);
    EXPECT_FALSE(apolar_apply(d, f).is_zero());
    for (const auto& p : x.points()) EXPECT_TRUE(d.evaluate(p.coords()).is_zero());
  }
}

TEST(SolveCoefficients, CubeRootGrid) {
  // x^2 y^2 z^2 on (1, w^a, w^b): coefficients w^(a+b) / 810.
  Points x(3);
  std::vector<C> oracle;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      x.push_back(pt(1, C::zeta_power(3, a), C::zeta_power(3, b)));
      oracle.push_back(C::zeta_power(3, a + b) * q(1, 810));
    }
  const auto dec = solve_coefficients(monomial_product(2, 2), x);
  EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
  EXPECT_EQ(dec.coeffs, oracle);
  EXPECT_EQ(naive_sum(x, oracle, 6), monomial_product(2, 2));
}

TEST(MonomialCI, Xyz) {
  const auto dec = monomial_ci_decomposition(2, 1, {C(1), C(1)});
  EXPECT_EQ(dec.points.size(), 4);
  for (const auto& p : {pt(1, 1, 1), pt(1, 1, -1), pt(1, -1, 1), pt(1, -1, -1)}) EXPECT_TRUE(dec.points.contains(p));
  EXPECT_TRUE(reconstructs(dec));
}

TEST(MonomialCI, BinaryCubeRoots) {
  const auto dec = monomial_ci_decomposition(1, 2, {C(1)});
  ASSERT_EQ(dec.points.size(), 3);
  for (int j = 0; j < 3; ++j) EXPECT_TRUE(dec.points.contains(Point{C(1), C::zeta_power(3, j)}));
  EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
  EXPECT_EQ(naive_sum(dec.points, dec.coeffs, 4), Form::monomial({2, 2}, C(1)));
}

TEST(MonomialCI, SquareOfSquares) {
  const auto dec = monomial_ci_decomposition(2, 2, {C(1), C(1)});
  EXPECT_EQ(dec.points.size(), 9);
  EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
  EXPECT_EQ(naive_sum(dec.points, dec.coeffs, 6), monomial_product(2, 2));
  EXPECT_TRUE(ideal_contained_in_ann(dec.points, dec.target).contained);
}

TEST(MonomialCI, ScaledAlpha) {
  // alpha = 1/8 and 8 for k = 2: roots 2 and 1/2.
  const auto dec = monomial_ci_decomposition(2, 2, {q(1, 8), C(8)});
  EXPECT_TRUE(dec.points.contains(pt(1, 2, q(1, 2))));
  EXPECT_EQ(naive_sum(dec.points, dec.coeffs, 6), monomial_product(2, 2));
}

TEST(MonomialCI, RootNotInField) {
  try {
    monomial_ci_decomposition(2, 1, {C(2), C(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RootNotInField);
  }
  EXPECT_NO_THROW(monomial_ci_decomposition(2, 1, {C(4), q(1, 9)}));
}

TEST(ThroughPoint, XyzLambda0) {
  const auto cert = decomposition_through_point(2, 1, pt(1, 1, 1));
  EXPECT_EQ(cert.lambda0, q(-1, 24));
  const auto& dec = cert.full_decomposition;
  ASSERT_EQ(dec.points.size(), 4);
  EXPECT_TRUE(dec.points[0].proportional_to(pt(1, 1, 1)));
  EXPECT_EQ(dec.coeffs, (std::vector<C>{q(1, 24), q(-1, 24), q(-1, 24), q(1, 24)}));
}

TEST(ThroughPoint, BinaryQuadricCondition) {
  // lambda_0 = -1/(4ab) for xy + lambda (ax+by)^2.
  for (long a : {1L, -2L, 3L})
    for (long b : {1L, 2L, -5L}) {
      const auto cert = decomposition_through_point(1, 1, Point{C(a), C(b)});
      EXPECT_EQ(cert.lambda0, C(-1) / C(4 * a * b));
      EXPECT_EQ(cert.full_decomposition.points.size(), 2);
    }
}

TEST(ThroughPoint, Lambda0MatchesClosedForm) {
  const std::vector<Point> ells{pt(1, 1, 1), pt(1, 2, 3), pt(q(1, 2), -1, 4)};
  for (int k = 1; k <= 2; ++k)
    for (const auto& ell : ells) {
      const auto cert = decomposition_through_point(2, k, ell);
      EXPECT_EQ(cert.lambda0, lambda0_oracle(2, k, ell)) << "k=" << k;
      EXPECT_TRUE(cert.full_decomposition.points.contains(ell));
    }
  for (int k = 1; k <= 4; ++k) {
    const Point ell{C(2), q(-1, 3)};
    EXPECT_EQ(decomposition_through_point(1, k, ell).lambda0, lambda0_oracle(1, k, ell));
  }
}

TEST(ThroughPoint, DegeneratePoint) {
  try {
    decomposition_through_point(2, 2, pt(1, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePoint);
  }
}

TEST(ThroughPoint, RescalingInvariance) {
  const Point ell = pt(1, 2, 3);
  for (int k = 1; k <= 2; ++k)
    for (const C t : {q(3, 2), q(-2), q(1, 5)}) {
      const auto a = decomposition_through_point(2, k, ell);
      const auto b = decomposition_through_point(2, k, scale(ell, {t, t, t}));
      EXPECT_EQ(b.lambda0 * pow(t, 3 * k), a.lambda0);
      ASSERT_EQ(a.full_decomposition.points.size(), b.full_decomposition.points.size());
      for (const auto& p : a.full_decomposition.points.points()) EXPECT_TRUE(b.full_decomposition.points.contains(p));
    }
}

TEST(ThroughPoint, RankDrop) {
  const Point ell = pt(1, 1, 1);
  for (int k = 1; k <= 3; ++k) {
    const auto cert = decomposition_through_point(2, k, ell);
    const Form f = monomial_product(2, k) + power_of_linear(ell, 3 * k) * cert.lambda0;
    const auto rest = cert.full_decomposition.points.without(*cert.full_decomposition.points.find(ell));
    const auto dec = solve_coefficients(f, rest);
    EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact) << "k=" << k;
    EXPECT_EQ(dec.points.size(), (k + 1) * (k + 1) - 1);
    EXPECT_TRUE(irredundant(dec).irredundant);
    // Any other lambda leaves the span.
    const Form g = monomial_product(2, k) + power_of_linear(ell, 3 * k) * (cert.lambda0 + C(1));
    EXPECT_THROW(solve_coefficients(g, rest), NotInSpanError);
  }
}

TEST(Equivariance, PermutationAndTorus) {
  const Point ell = pt(1, 2, 3);
  const auto cert = decomposition_through_point(2, 2, ell);
  const auto& dec = cert.full_decomposition;
  for (const std::vector<int>& perm : {std::vector<int>{1, 0, 2}, {2, 0, 1}, {0, 2, 1}}) {
    Points px(3);
    for (const auto& p : dec.points.points()) px.push_back(permute(p, perm));
    Decomposition moved{permute(dec.target, perm), px, dec.coeffs};
    EXPECT_TRUE(reconstructs(moved));
  }
  // f(Sx) with det S = 1 is decomposed by the points S l.
  for (const std::vector<C>& s : {std::vector<C>{C(2), q(1, 2), C(1)}, {C(3), C(-1), q(-1, 3)}}) {
    const Form f = scale(dec.target, s);
    EXPECT_EQ(f, dec.target);
    Points sx(3);
    for (const auto& p : dec.points.points()) sx.push_back(scale(p, s));
    const auto moved = solve_coefficients(f, sx);
    EXPECT_EQ(moved.status, DecompositionStatus::VerifiedExact);
    EXPECT_EQ(moved.coeffs, dec.coeffs);
  }
}

TEST(Irredundant, XyzIsIrredundant) {
  const auto dec = monomial_ci_decomposition(2, 1, {C(1), C(1)});
  EXPECT_TRUE(irredundant(dec).irredundant);
}

TEST(Irredundant, ZeroCoefficient) {
  auto dec = monomial_ci_decomposition(2, 2, {C(1), C(1)});
  dec.points.push_back(pt(1, 2, 3));
  dec.coeffs.push_back(C(0));
  dec.kernel_dim = 1;
  ASSERT_TRUE(reconstructs(dec));
  const auto r = irredundant(dec);
  EXPECT_FALSE(r.irredundant);
  EXPECT_EQ(r.witness, (std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Irredundant, KernelWitnessReconstructs) {
  // Nine CI points plus (1,2,3) solved jointly.
  auto x = monomial_ci_decomposition(2, 2, {C(1), C(1)}).points;
  x.push_back(pt(1, 2, 3));
  const auto dec = solve_coefficients(monomial_product(2, 2), x);
  EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
  const auto r = irredundant(dec);
  EXPECT_FALSE(r.irredundant);
  ASSERT_LT(r.witness.size(), 10u);
  const Decomposition sub{dec.target, x.subset(r.witness), r.witness_coeffs, DecompositionStatus::Unverified};
  EXPECT_TRUE(reconstructs(sub));
}

TEST(BinaryOvercomplete, GaussianIntegers) {
  const Form l1 = Form::monomial({0, 1}, C(1), Side::Dual);
  const Form l2 = Form::monomial({1, 0}, C(1), Side::Dual);
  const auto dec = binary_overcomplete(2, l1, l2);
  EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
  ASSERT_EQ(dec.points.size(), 4);
  const C i = C::zeta(4);
  for (const auto& p : {Point{C(1), C(0)}, Point{C(0), C(1)}, Point{C(1), i}, Point{C(1), -i}})
    EXPECT_TRUE(dec.points.contains(p));
  for (const auto& c : dec.coeffs) EXPECT_FALSE(c.is_zero());
  EXPECT_EQ(naive_sum(dec.points, dec.coeffs, 4), Form::monomial({2, 2}, C(1)));
  EXPECT_TRUE(irredundant(dec).irredundant);
}

TEST(BinaryOvercomplete, Rejections) {
  const Form x = Form::monomial({1, 0}, C(1), Side::Dual);
  try {
    binary_overcomplete(2, x, x * C(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DependentLinearForms);
  }
  // L1 = X - 2Y, L2 = 2X - Y: F has a double root at (1, 1).
  Form l1 = x, l2 = x * C(2);
  l1.add_term({0, 1}, C(-2));
  l2.add_term({0, 1}, C(-1));
  try {
    binary_overcomplete(2, l1, l2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquareFree);
  }
}

TEST(BinaryOvercomplete, RandomK3) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> coef(-7, 7);
  int done = 0;
  while (done < 5) {
    Form l1(2, 1, Side::Dual), l2(2, 1, Side::Dual);
    l1.add_term({1, 0}, C(coef(rng)));
    l1.add_term({0, 1}, C(coef(rng)));
    l2.add_term({1, 0}, C(coef(rng)));
    l2.add_term({0, 1}, C(coef(rng)));
    Decomposition dec;
    try {
      dec = binary_overcomplete(3, l1, l2);
    } catch (const Error&) {
      continue;
    }
    ++done;
    EXPECT_EQ(dec.length(), 5);
    if (dec.status == DecompositionStatus::VerifiedNumeric) {
      ASSERT_TRUE(dec.numeric);
      EXPECT_LE(dec.numeric->residual, 1e-9);
    } else {
      EXPECT_EQ(dec.status, DecompositionStatus::VerifiedExact);
      EXPECT_TRUE(reconstructs(dec));
    }
    EXPECT_TRUE(irredundant(dec).irredundant);
  }
}

TEST(Experiment, DeterministicAndRedundant) {
  const auto a = overcomplete_redundancy_experiment(2, 4, 7);
  const auto b = overcomplete_redundancy_experiment(2, 4, 7);
  EXPECT_EQ(a.redundant_count, 4);
  EXPECT_TRUE(a.counterexamples.empty());
  ASSERT_EQ(a.details.size(), b.details.size());
  for (std::size_t i = 0; i < a.details.size(); ++i) {
    EXPECT_EQ(a.details[i].seed, b.details[i].seed);
    EXPECT_EQ(a.details[i].extra_point, b.details[i].extra_point);
    EXPECT_EQ(a.details[i].witness, b.details[i].witness);
    EXPECT_FALSE(a.details[i].witness.empty());
    EXPECT_LT(a.details[i].witness.size(), 10u);
  }
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
}

TEST(Experiment, CubicRoots) {
  const auto r = overcomplete_redundancy_experiment(3, 1, 99);
  EXPECT_EQ(r.redundant_count, 1);
}
