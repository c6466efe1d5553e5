#include <gtest/gtest.h>

#include <random>

#include "waring/apolar.hpp"
#include "waring/form.hpp"

using namespace waring;
using Form = HomogeneousForm<Rational>;
using Pt = LinearFormPoint<Rational>;

namespace {

Form mono(std::initializer_list<int> e, Rational c = 1, Side side = Side::Primal) {
  return Form::monomial(Exponent(e), c, side);
}

// Oracle: one partial derivative at a time.
Form partial(const Form& f, int var) {
  Form out(f.nvars(), f.degree() - 1);
  for (const auto& [e, c] : f.terms()) {
    if (e[static_cast<std::size_t>(var)] == 0) continue;
    Exponent g = e;
    --g[static_cast<std::size_t>(var)];
    out.add_term(g, c * Rational(e[static_cast<std::size_t>(var)]));
  }
  return out;
}

Form oracle_apply(const Form& d, const Form& f) {
  Form out(f.nvars(), f.degree() - d.degree());
  for (const auto& [e, c] : d.terms()) {
    Form g = f;
    for (int v = 0; v < f.nvars(); ++v)
      for (int i = 0; i < e[static_cast<std::size_t>(v)]; ++i) g = partial(g, v);
    out += g.with_side(Side::Primal) * c;
  }
  return out;
}

Form random_form(std::mt19937_64& rng, int n, int d, Side side = Side::Primal, int density = 3) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> keep(0, density);
  Form f(n, d, side);
  for (const auto& e : monomials(n, d))
    if (keep(rng) == 0) f.add_term(e, Rational(coeff(rng)));
  return f;
}

Pt random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> c(-3, 3);
  for (;;) {
    Vector<Rational> v(n);
    bool nz = false;
    for (int i = 0; i < n; ++i) {
      v(i) = Rational(c(rng));
      nz = nz || !v(i).is_zero();
    }
    if (nz) return Pt(v);
  }
}

}  // namespace

TEST(Monomials, OrderAndDimension) {
  const auto m = monomials(3, 2);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m[0], (Exponent{2, 0, 0}));
  EXPECT_EQ(m[1], (Exponent{1, 1, 0}));
  EXPECT_EQ(m[5], (Exponent{0, 0, 2}));
  EXPECT_EQ(dim_forms(3, 13), 105);
}

TEST(Form, InvariantsAndArithmetic) {
  Form f(3, 2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.degree(), 2);
  f.add_term({2, 0, 0}, 1);
  f.add_term({2, 0, 0}, -1);
  EXPECT_TRUE(f.terms().empty());
  EXPECT_THROW(f.add_term({1, 0, 0}, 1), Error);
}

TEST(ApolarApply, SpecExamples) {
  EXPECT_EQ(apolar_apply(mono({1, 0, 0}, 1, Side::Dual), mono({2, 0, 0})), mono({1, 0, 0}, 2));
  EXPECT_TRUE(apolar_apply(mono({3, 0, 0}, 1, Side::Dual), mono({2, 2, 2})).is_zero());
  const Form one = apolar_apply(mono({1, 1, 1}, 1, Side::Dual), mono({1, 1, 1}));
  EXPECT_EQ(one.degree(), 0);
  EXPECT_EQ(one.coefficient({0, 0, 0}), Rational(1));
  EXPECT_THROW(apolar_apply(mono({3, 0, 0}, 1, Side::Dual), mono({2, 0, 0})), Error);
}

TEST(ApolarApply, MatchesIteratedDerivatives) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 5, p = trial % (d + 1);
    const Form f = random_form(rng, 3, d);
    const Form op = random_form(rng, 3, p, Side::Dual);
    EXPECT_EQ(apolar_apply(op, f), oracle_apply(op, f));
  }
}

TEST(ApolarApply, Bilinearity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 3 + trial % 4, p = 1 + trial % 3;
    const Form f = random_form(rng, 3, d);
    const Form d1 = random_form(rng, 3, p, Side::Dual), d2 = random_form(rng, 3, p, Side::Dual);
    const Rational a(trial - 7, 3), b(2, trial + 1);
    EXPECT_EQ(apolar_apply(d1 * a + d2 * b, f), apolar_apply(d1, f) * a + apolar_apply(d2, f) * b);
  }
}

TEST(ApolarApply, ContractionIdentity) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 8;
    const int p = trial % (d + 1);
    const Pt l = random_point(rng, 3);
    const Form op = random_form(rng, 3, p, Side::Dual, 2);
    const Form lhs = apolar_apply(op, power_of_linear(l, d));
    const Rational scale = Rational(factorial(d) / factorial(d - p)) * op.evaluate(l.coords());
    EXPECT_EQ(lhs, power_of_linear(l, d - p) * scale);
  }
}

TEST(PowerOfLinear, Examples) {
  EXPECT_EQ(power_of_linear(Pt{1, 0, 0}, 3), mono({3, 0, 0}));
  const Form sq = power_of_linear(Pt{1, 1, 0}, 2);
  EXPECT_EQ(sq, mono({2, 0, 0}) + mono({1, 1, 0}, 2) + mono({0, 2, 0}));
  // Oracle: repeated multiplication of x + y + z.
  const Form l = mono({1, 0, 0}) + mono({0, 1, 0}) + mono({0, 0, 1});
  const Form cube = l * l * l;
  EXPECT_EQ(power_of_linear(Pt{1, 1, 1}, 3), cube);
  EXPECT_EQ(cube.terms().size(), 10u);
}

TEST(Catalecticant, Examples) {
  EXPECT_EQ(rank_of<Rational>(catalecticant(mono({1, 1}), 1).entries), 2);
  for (int p = 0; p <= 5; ++p) EXPECT_EQ(rank_of<Rational>(catalecticant(mono({5, 0, 0}), p).entries), 1);
  const auto cat = catalecticant(mono({2, 2, 2}), 3);
  EXPECT_EQ(cat.entries.rows(), 10);
  EXPECT_EQ(cat.entries.cols(), 10);
  EXPECT_EQ(rank_of<Rational>(cat.entries), 7);
  EXPECT_THROW(catalecticant(mono({2, 0, 0}), 3), Error);
}

TEST(Catalecticant, ColumnsAreDerivatives) {
  std::mt19937_64 rng(13);
  const Form f = random_form(rng, 3, 5);
  const auto cat = catalecticant(f, 2);
  const MonomialBasis cols(3, 2), rows(3, 3);
  for (Index j = 0; j < cols.size(); ++j) {
    const Form g = oracle_apply(Form::monomial(cols[j], 1, Side::Dual), f);
    for (Index i = 0; i < rows.size(); ++i) EXPECT_EQ(cat.entries(i, j), g.coefficient(rows[i]));
  }
}

TEST(Catalecticant, Symmetry) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 5;
    const Form f = random_form(rng, 3, d, Side::Primal, 4);
    for (int p = 0; p <= d; ++p)
      EXPECT_EQ(rank_of<Rational>(catalecticant(f, p).entries), rank_of<Rational>(catalecticant(f, d - p).entries));
  }
}

TEST(AnnDegree, Examples) {
  const auto s = ann_degree(mono({2, 2, 2}), 3);
  ASSERT_EQ(s.basis.size(), 3u);
  EXPECT_EQ(s.basis[0], mono({3, 0, 0}, 1, Side::Dual));
  EXPECT_EQ(s.basis[1], mono({0, 3, 0}, 1, Side::Dual));
  EXPECT_EQ(s.basis[2], mono({0, 0, 3}, 1, Side::Dual));

  const auto b = ann_degree(mono({4, 0}), 1);
  ASSERT_EQ(b.basis.size(), 1u);
  EXPECT_EQ(b.basis[0], mono({0, 1}, 1, Side::Dual));

  EXPECT_TRUE(ann_degree(mono({2, 0}), 3).full);
  EXPECT_EQ(ann_degree(mono({2, 0}), 3).dim(), 4);
}

TEST(AnnDegree, BinaryBinomial) {
  // x^2 y^2 + x^4: kernel of cat_3 is span{X^3 - 6 X Y^2, Y^3}.
  const Form f = mono({2, 2}) + mono({4, 0});
  const auto s = ann_degree(f, 3);
  ASSERT_EQ(s.basis.size(), 2u);
  const Form g1 = mono({3, 0}, 1, Side::Dual) + mono({1, 2}, -6, Side::Dual);
  const Form g2 = mono({0, 3}, 1, Side::Dual);
  for (const auto& b : s.basis) EXPECT_TRUE(apolar_apply(b, f).is_zero());
  // Same span: both oracle generators annihilate f and cat_3 has rank 2.
  EXPECT_TRUE(apolar_apply(g1, f).is_zero());
  EXPECT_TRUE(apolar_apply(g2, f).is_zero());
  EXPECT_EQ(rank_of<Rational>(catalecticant(f, 3).entries), 2);
}

TEST(AnnDegree, DimensionIdentity) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 5;
    const Form f = random_form(rng, 3, d);
    for (int t = 0; t <= d; ++t)
      EXPECT_EQ(ann_degree(f, t).dim() + rank_of<Rational>(catalecticant(f, t).entries), dim_forms(3, t));
  }
}

TEST(AnnGenerators, Monomials) {
  const auto g = ann_generators(mono({2, 2, 2}));
  ASSERT_EQ(g.degrees.size(), 1u);
  EXPECT_EQ(g.degrees[0], (std::pair<int, int>{3, 3}));
  EXPECT_EQ(g.generators[0], mono({3, 0, 0}, 1, Side::Dual));

  const auto b = ann_generators(mono({2, 2}));
  ASSERT_EQ(b.degrees.size(), 1u);
  EXPECT_EQ(b.degrees[0], (std::pair<int, int>{3, 2}));
}

TEST(AnnGenerators, BinaryBinomial) {
  const auto g = ann_generators(mono({2, 2}) + mono({4, 0}));
  ASSERT_EQ(g.degrees.size(), 1u);
  EXPECT_EQ(g.degrees[0], (std::pair<int, int>{3, 2}));
  EXPECT_EQ(g.generators[0], mono({3, 0}, 1, Side::Dual) + mono({1, 2}, -6, Side::Dual));
  EXPECT_EQ(g.generators[1], mono({0, 3}, 1, Side::Dual));
}

TEST(Containment, Examples) {
  PointSet<Rational> single(3, {Pt{1, 0, 0}});
  const auto r = ideal_contained_in_ann(single, mono({0, 3, 0}));
  EXPECT_FALSE(r.contained);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->degree(), 1);
  EXPECT_FALSE(apolar_apply(*r.witness, mono({0, 3, 0})).is_zero());

  PointSet<Rational> five(3, {Pt{1, 0, 0}, Pt{1, 1, 0}, Pt{1, 2, 0}, Pt{0, 1, 0}, Pt{0, 0, 1}});
  std::mt19937_64 rng(23);
  Form f(3, 6);
  for (const auto& p : five.points()) f += power_of_linear(p, 6) * Rational(static_cast<long>(rng() % 7) - 3);
  EXPECT_TRUE(ideal_contained_in_ann(five, f).contained);
}
