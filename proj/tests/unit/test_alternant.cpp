#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "oracles.hpp"
#include "superschur/alternant.hpp"
#include "superschur/dets.hpp"
#include "superschur/errors.hpp"

using namespace superschur;

namespace {

LaurentPoly P(const char* text, const RingContext& ctx) { return parse_poly(text, ctx); }

LaurentPoly random_poly(std::mt19937_64& rng, const RingContext& ctx) {
  std::uniform_int_distribution<int> e(-2, 3);
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<Term> terms;
  for (int t = 0; t < 4; ++t) {
    Monomial mono;
    for (int s = 0; s < ctx.variable_count(); ++s) mono[s] = static_cast<Monomial::Exponent>(e(rng));
    terms.push_back(Term{mono, c(rng)});
  }
  return LaurentPoly::from_terms(ctx.m, ctx.n, std::move(terms));
}

}  // namespace

TEST(Alternant, MatchesPlainEnumeration) {
  std::mt19937_64 rng(17);
  for (auto [m, n] : {std::pair{1, 0}, {2, 0}, {3, 0}, {2, 1}, {2, 2}, {3, 2}, {0, 3}}) {
    const RingContext ctx(m, n);
    for (int i = 0; i < 10; ++i) {
      const LaurentPoly f = random_poly(rng, ctx);
      EXPECT_EQ(alternate(f, ctx), oracle::alternate(f, ctx)) << m << "," << n;
    }
  }
}

TEST(Alternant, SmallExamples) {
  const RingContext c20(2, 0);
  EXPECT_TRUE(alternate(LaurentPoly::one(c20), c20).is_zero());
  EXPECT_EQ(alternate(P("x1", c20), c20), P("x1 - x2", c20));
  const RingContext c30(3, 0);
  EXPECT_EQ(alternate(P("x1^2*x2", c30), c30), vandermonde(Sector::x, c30));
  EXPECT_EQ(vandermonde(Sector::x, c30), P("x1 - x2", c30) * P("x1 - x3", c30) * P("x2 - x3", c30));
  EXPECT_TRUE(vandermonde(Sector::x, RingContext(1, 0)).is_one());
}

TEST(Alternant, SignFlipsUnderTransposition) {
  std::mt19937_64 rng(23);
  const RingContext ctx(3, 2);
  for (int i = 0; i < 5; ++i) {
    const LaurentPoly a = alternate(random_poly(rng, ctx), ctx);
    EXPECT_EQ(transpose_variables(a, Variable::x(0), Variable::x(2)), -a);
    EXPECT_EQ(transpose_variables(a, Variable::y(0), Variable::y(1)), -a);
  }
}

TEST(Alternant, EulerCharacterExamples) {
  const RingContext c20(2, 0);
  EXPECT_TRUE(euler_E({0, 0}, c20).is_one());
  EXPECT_EQ(euler_E({-2, 0}, c20), P("-x1^-1*x2^-1", c20));
  EXPECT_EQ(euler_E({0, -1}, c20), P("x1^-1 + x2^-1", c20));
  EXPECT_THROW(euler_E({1}, c20), Error);
}

TEST(Alternant, EulerCharacterIsTheAlternantQuotient) {
  for (int m = 1; m <= 3; ++m) {
    const RingContext ctx(m, 0);
    const LaurentPoly vdm = oracle::vandermonde_both(ctx);
    const LaurentPoly xs = [&] {
      LaurentPoly out = LaurentPoly::one(ctx);
      for (int i = 0; i < m; ++i) out *= LaurentPoly::variable(ctx, Variable::x(i));
      return out;
    }();
    for (const auto& lambda : non_increasing_sequences(m, -3, 3)) {
      const LaurentPoly e = euler_E(lambda, ctx);
      Monomial mono = oracle::staircase_both(ctx);
      for (int i = 0; i < m; ++i) mono[i] = static_cast<Monomial::Exponent>(mono[i] + lambda[static_cast<std::size_t>(i)]);
      EXPECT_EQ(e * vdm, oracle::alternate(LaurentPoly::monomial(ctx, mono), ctx));
      EXPECT_TRUE(is_symmetric(e));
      if (!e.is_zero()) EXPECT_EQ(*e.homogeneous_degree(), sum_of(lambda));
      IntSeq shifted = lambda;
      for (int& v : shifted) ++v;
      EXPECT_EQ(xs * e, euler_E(shifted, ctx));
    }
  }
}

TEST(Alternant, EulerCharactersAreIndependent) {
  const RingContext ctx(2, 0);
  for (int d = -3; d <= 3; ++d) {
    std::vector<LaurentPoly> family;
    for (const auto& lambda : non_increasing_sequences(2, -4, 4)) {
      if (sum_of(lambda) == d) family.push_back(euler_E(lambda, ctx));
    }
    // Distinct leading monomials x^{lambda} suffice: the leading term of E_lambda is x1^l1 x2^l2.
    std::set<Monomial> leads;
    for (const auto& f : family) leads.insert(f.terms().front().monomial);
    EXPECT_EQ(leads.size(), family.size()) << d;
  }
}

TEST(Alternant, KacProductExamples) {
  const RingContext c11(1, 1);
  EXPECT_EQ(kac_product({0}, {0}, c11), P("1 - x1^-1*y1", c11));
  // tau = (1) contributes the sign: by hand, K = det[[H1, H2], [1, h1]] = y1^2 - x1*y1.
  EXPECT_EQ(kac_product({1}, {1}, c11), P("y1^2 - x1*y1", c11));
  EXPECT_EQ(kac_product({1}, {1}, c11), kac_K({1}, {1}, c11));
  EXPECT_EQ(kac_factor(c11), P("1 - x1^-1*y1", c11));
  EXPECT_THROW(kac_product({0, 0}, {0}, c11), Error);
}

TEST(Alternant, WeightedCharacterExamples) {
  const RingContext c11(1, 1);
  EXPECT_EQ(euler_D({0}, {0}, c11), P("1 - x1^-1*y1", c11));
  const RingContext c22(2, 2);
  EXPECT_EQ(euler_D({}, {}, c22), kac_K({}, {}, c22));
  for (const auto& lambda : non_increasing_sequences(2, -2, 2)) {
    for (const auto& mu : non_increasing_sequences(2, -2, 2)) {
      EXPECT_EQ(euler_D(lambda, mu, c22), kac_product(lambda, mu, c22));
    }
  }
  EXPECT_THROW(euler_D({0, 0, 0}, {}, c22), Error);
}

// For a short lambda with a negative part in mu the alternant and the
// determinant are different elements. Both values below were worked out by
// hand: the determinant is the single entry h*_1, the alternant is
// -{(1 - x1/y1) y1^-1 y1} / (y1 - y2).
TEST(Alternant, ShortLambdaWithNegativePart) {
  const RingContext c12(1, 2);
  EXPECT_EQ(kac_K({}, {-1}, c12), P("x1^-1 - y1^-1 - y2^-1", c12));
  EXPECT_EQ(euler_D({}, {-1}, c12), P("-x1*y1^-1*y2^-1", c12));
  // With no negative part the two agree.
  for (int t = 0; t <= 3; ++t) EXPECT_EQ(kac_K({}, {t}, c12), euler_D({}, {t}, c12)) << t;
}

TEST(Alternant, BudgetFromEnvironment) {
  ::setenv("SUPERSCHUR_BUDGET", "5", 1);
  const RingContext ctx(3, 0);
  try {
    alternate(LaurentPoly::one(ctx), ctx);
    ADD_FAILURE() << "expected budget_exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
  }
  ::unsetenv("SUPERSCHUR_BUDGET");
  EXPECT_EQ(permutation_budget(), kDefaultPermutationBudget);
  EXPECT_NO_THROW(alternate(LaurentPoly::one(ctx), ctx));
}
