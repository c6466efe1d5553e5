#include <gtest/gtest.h>

#include <random>

#include "waring/classify.hpp"

using namespace waring;
using C = Cyclotomic;

namespace {

C q(long n, long d = 1) { return C(Rational(n, d)); }

Point pt(C a, C b, C c) { return Point{a, b, c}; }

bool has_bound(const RankCertificate& cert, Provenance p, int value) {
  for (const auto& b : cert.lower_bounds)
    if (b.provenance == p && b.value == value) return true;
  return false;
}

void expect_sound(const RankCertificate& cert) {
  ASSERT_TRUE(cert.upper_bound.has_value());
  EXPECT_EQ(cert.upper_bound->status, DecompositionStatus::VerifiedExact);
  EXPECT_TRUE(reconstructs(*cert.upper_bound));
  EXPECT_EQ(cert.upper_bound->target, cert.target);
  EXPECT_EQ(cert.upper_bound->length(), cert.claimed_rank);
  for (const auto& c : cert.upper_bound->coeffs) EXPECT_FALSE(c.is_zero());
  for (const auto& b : cert.lower_bounds) EXPECT_LE(b.value, cert.claimed_rank);
  EXPECT_TRUE(ideal_contained_in_ann(cert.upper_bound->points, cert.target).contained);
}

// Oracle: a monomial's catalecticant of order p has rank equal to the number of
// exponents alpha <= e with |alpha| = p.
int monomial_cat_rank(const Exponent& e, int p) {
  int count = 0;
  for (const auto& a : monomials(static_cast<int>(e.size()), p)) {
    bool below = true;
    for (std::size_t i = 0; i < e.size(); ++i) below = below && a[i] <= e[i];
    count += below;
  }
  return count;
}

Form sum_of_cubes(const std::vector<Point>& pts, const std::vector<C>& c) {
  Form f(3, 3);
  for (std::size_t i = 0; i < pts.size(); ++i) f += power_of_linear(pts[i], 3) * c[i];
  return f;
}

}  // namespace

TEST(Cubic, RankThreeAtLambda0) {
  const auto cert = classify_ternary_cubic(pt(1, 1, 1), q(-1, 24));
  EXPECT_EQ(cert.claimed_rank, 3);
  ASSERT_TRUE(cert.lambda0);
  EXPECT_EQ(*cert.lambda0, q(-1, 24));
  expect_sound(cert);
  EXPECT_TRUE(cert.machine_certified());
}

TEST(Cubic, RankFourElsewhere) {
  for (const C lambda : {q(1), q(-1, 25), q(1, 24), q(-1, 23)}) {
    const auto cert = classify_ternary_cubic(pt(1, 1, 1), lambda);
    EXPECT_EQ(cert.claimed_rank, 4);
    EXPECT_TRUE(has_bound(cert, Provenance::Computed, 4));
    expect_sound(cert);
    EXPECT_TRUE(cert.machine_certified());
  }
}

TEST(Cubic, DegenerateLinearForm) {
  const std::vector<Point> ells{pt(1, 0, 0), pt(1, 1, 0), pt(0, 2, 3), pt(0, 0, 1), pt(5, 0, -1), pt(0, q(1, 2), 0)};
  const std::vector<C> lambdas{q(1), q(1, 6), q(-1, 6), q(-5, 7), C::zeta(3)};
  for (const auto& ell : ells)
    for (const auto& lambda : lambdas) {
      const auto cert = classify_ternary_cubic(ell, lambda);
      EXPECT_EQ(cert.claimed_rank, 4);
      EXPECT_FALSE(cert.lambda0.has_value());
      expect_sound(cert);
      EXPECT_TRUE(cert.machine_certified());
    }
}

TEST(Cubic, GeneralPointLambda0) {
  // lambda_0 = -1/(24 abc).
  const Point ell = pt(2, -1, 3);
  const C l0 = q(1, 144);
  const auto drop = classify_ternary_cubic(ell, l0);
  EXPECT_EQ(drop.claimed_rank, 3);
  EXPECT_EQ(*drop.lambda0, l0);
  EXPECT_EQ(classify_ternary_cubic(ell, l0 * C(2)).claimed_rank, 4);
}

TEST(Cubic, ZeroLambda) {
  try {
    classify_ternary_cubic(pt(1, 1, 1), C(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroLambda);
  }
}

TEST(RankThreeTest, KnownCubics) {
  EXPECT_EQ(cubic_rank_three(sum_of_cubes({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}, {1, 1, 1})), true);
  EXPECT_EQ(cubic_rank_three(monomial_product(2, 1)), false);
  EXPECT_EQ(cubic_rank_three(Form::monomial({2, 1, 0}, C(1))), std::nullopt);
  Form f = Form::monomial({2, 1, 0}, C(1));
  f.add_term({0, 0, 3}, C(1));
  EXPECT_EQ(cubic_rank_three(f), false);
}

TEST(RankThreeTest, RandomSumsOfCubes) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> coord(-4, 4), coef(1, 5);
  int three = 0, four = 0;
  while (three < 15 || four < 15) {
    const int r = three < 15 ? 3 : 4;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < r) {
      const long a = coord(rng), b = coord(rng), c = coord(rng);
      if (a == 0 && b == 0 && c == 0) continue;
      const Point p = pt(a, b, c);
      bool fresh = true;
      for (const auto& o : pts) fresh = fresh && !o.proportional_to(p);
      if (fresh) pts.push_back(p);
    }
    std::vector<C> cs;
    for (int i = 0; i < r; ++i) cs.push_back(C(coef(rng)));
    const Form f = sum_of_cubes(pts, cs);
    const auto res = cubic_rank_three(f);
    if (!res) continue;  // collinear points
    if (r == 3) {
      EXPECT_TRUE(*res);
      ++three;
    } else {
      // Four cubes with no three points collinear: the base locus of the net
      // lies in the four points, so no 3-point decomposition exists.
      Points x(pts);
      bool general = true;
      for (int i = 0; i < 4; ++i) general = general && hilbert_function(x.without(i), 1) == 3;
      if (!general) continue;
      EXPECT_FALSE(*res);
      ++four;
    }
  }
}

TEST(RankThreeTest, CubicConsistencyScan) {
  for (const Point& ell : {pt(1, 1, 1), pt(1, 2, -1)}) {
    const C l0 = decomposition_through_point(2, 1, ell).lambda0;
    for (int j = -3; j <= 3; ++j) {
      const C lambda = l0 + q(j, 10);
      if (lambda.is_zero()) continue;
      const Form f = ternary_binomial(1, ell, lambda);
      EXPECT_EQ(*cubic_rank_three(f), j == 0);
      EXPECT_EQ(classify_ternary_cubic(ell, lambda).claimed_rank, j == 0 ? 3 : 4);
    }
  }
}

TEST(TernaryBinomial, KTwoRankDrop) {
  const auto cert = classify_ternary_binomial(2, pt(1, 1, 1), q(-1, 810));
  EXPECT_EQ(cert.claimed_rank, 8);
  EXPECT_EQ(*cert.lambda0, q(-1, 810));
  expect_sound(cert);
  EXPECT_TRUE(has_bound(cert, Provenance::Computed, catalecticant_lower_bound(cert.target)));
  EXPECT_TRUE(has_bound(cert, Provenance::Theorem, 8));
}

TEST(TernaryBinomial, KTwoGeneric) {
  const auto cert = classify_ternary_binomial(2, pt(1, 1, 1), q(-1, 810) + C(1));
  EXPECT_EQ(cert.claimed_rank, 9);
  expect_sound(cert);
  EXPECT_TRUE(has_bound(cert, Provenance::Theorem, 9));
}

TEST(TernaryBinomial, KTwoDegenerate) {
  const auto cert = classify_ternary_binomial(2, pt(1, 1, 0), C(1));
  EXPECT_EQ(cert.claimed_rank, 10);
  expect_sound(cert);
  EXPECT_FALSE(cert.lambda0.has_value());
  EXPECT_TRUE(has_bound(cert, Provenance::Theorem, 10));
  EXPECT_EQ(cert.upper_bound->kernel_dim, 0);
  EXPECT_FALSE(cert.machine_certified());
}

TEST(TernaryBinomial, Lambda0Uniqueness) {
  const Point ell = pt(1, 1, 1);
  const auto tp = decomposition_through_point(2, 2, ell);
  const auto rest = tp.full_decomposition.points.without(*tp.full_decomposition.points.find(ell));
  for (int j = -3; j <= 3; ++j) {
    const C lambda = tp.lambda0 + q(j, 10);
    const Form f = ternary_binomial(2, ell, lambda);
    if (j == 0) {
      EXPECT_EQ(solve_coefficients(f, rest).status, DecompositionStatus::VerifiedExact);
    } else {
      EXPECT_THROW(solve_coefficients(f, rest), NotInSpanError);
      const auto full = solve_coefficients(f, tp.full_decomposition.points);
      EXPECT_EQ(full.status, DecompositionStatus::VerifiedExact);
      EXPECT_TRUE(irredundant(full).irredundant);
    }
    EXPECT_EQ(classify_ternary_binomial(2, ell, lambda).claimed_rank, j == 0 ? 8 : 9);
  }
}

TEST(TernaryBinomial, KThree) {
  const Point ell = pt(1, -1, 2);
  const auto l0 = decomposition_through_point(2, 3, ell).lambda0;
  const auto cert = classify_ternary_binomial(3, ell, l0);
  EXPECT_EQ(cert.claimed_rank, 15);
  expect_sound(cert);
  const auto deg = classify_ternary_binomial(3, pt(0, 1, 1), q(2, 3));
  EXPECT_EQ(deg.claimed_rank, 17);
  expect_sound(deg);
}

TEST(TernaryBinomial, Errors) {
  try {
    classify_ternary_binomial(5, pt(1, 1, 1), C(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedK);
  }
  try {
    classify_ternary_binomial(2, pt(1, 1, 1), C(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroLambda);
  }
  EXPECT_EQ(classify_ternary_binomial(1, pt(1, 1, 1), q(-1, 24)).claimed_rank, 3);
}

TEST(RankBounds, Examples) {
  const auto a = rank_bounds(monomial_product(2, 2));
  EXPECT_EQ(a.lower, 7);
  EXPECT_EQ(a.upper, 9);
  const auto b = rank_bounds(Form::monomial({3, 0, 0}, C(1)));
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 1);
  const auto c = rank_bounds(monomial_product(2, 1));
  EXPECT_EQ(c.lower, 3);
  EXPECT_EQ(c.upper, 4);
  EXPECT_EQ(c.upper_source, "monomial");
}

TEST(RankBounds, MonomialOracle) {
  for (const Exponent& e : {Exponent{1, 2, 3}, Exponent{2, 0, 3}, Exponent{1, 1, 4}, Exponent{2, 3}, Exponent{0, 5, 0}}) {
    const Form f = Form::monomial(e, C(1));
    const auto r = rank_bounds(f);
    int lower = 0;
    for (int p = 0; p <= f.degree(); ++p) lower = std::max(lower, monomial_cat_rank(e, p));
    EXPECT_EQ(r.lower, lower);
    // Product of (e_i + 1) over all but a smallest nonzero exponent.
    std::vector<int> nz;
    for (int a : e)
      if (a > 0) nz.push_back(a);
    std::sort(nz.begin(), nz.end());
    int upper = 1;
    for (std::size_t i = 1; i < nz.size(); ++i) upper *= nz[i] + 1;
    ASSERT_TRUE(r.upper);
    EXPECT_EQ(*r.upper, upper);
    EXPECT_TRUE(reconstructs(*r.decomposition));
  }
}

TEST(RankBounds, RankOneAndUser) {
  const Form p = power_of_linear(pt(1, 2, -1), 5) * q(3, 7);
  const auto r = rank_bounds(p);
  EXPECT_EQ(r.lower, 1);
  EXPECT_EQ(r.upper, 1);
  EXPECT_EQ(r.upper_source, "rank-one");

  const Form fermat = sum_of_cubes({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}, {1, 1, 1});
  EXPECT_FALSE(rank_bounds(fermat).upper.has_value());
  const Points user(std::vector<Point>{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)});
  const auto u = rank_bounds(fermat, user);
  EXPECT_EQ(u.lower, 3);
  EXPECT_EQ(u.upper, 3);
  EXPECT_EQ(u.upper_source, "user");
  const Points wrong(std::vector<Point>{pt(1, 0, 0), pt(0, 1, 0)});
  EXPECT_FALSE(rank_bounds(fermat, wrong).upper.has_value());
}

TEST(Catalecticant, LowerBoundBelowRank) {
  for (int k = 2; k <= 3; ++k) {
    const Form g = monomial_product(2, k);
    EXPECT_EQ(catalecticant_lower_bound(g), monomial_cat_rank({k, k, k}, (3 * k) / 2));
    EXPECT_LT(catalecticant_lower_bound(g), (k + 1) * (k + 1));
  }
}
