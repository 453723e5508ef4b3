#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superschur/errors.hpp"
#include "superschur/polyring.hpp"

using namespace superschur;

namespace {

LaurentPoly P(const char* text, const RingContext& ctx) { return parse_poly(text, ctx); }

// Random sparse poly with exponents in [-2, 2].
LaurentPoly random_poly(std::mt19937_64& rng, const RingContext& ctx, int terms) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial mono;
    for (int s = 0; s < ctx.variable_count(); ++s) mono[s] = static_cast<Monomial::Exponent>(e(rng));
    out.push_back(Term{mono, c(rng)});
  }
  return LaurentPoly::from_terms(ctx.m, ctx.n, std::move(out));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::parse_error;
}

}  // namespace

TEST(Polyring, CanonicalText) {
  const RingContext c11(1, 1);
  EXPECT_EQ(to_string(P("1 - x1^-1*y1", c11)), "1 - x1^-1*y1");
  EXPECT_EQ(to_string(P("-y1*x1^-1 + 1", c11)), "1 - x1^-1*y1");
  EXPECT_EQ(to_string(LaurentPoly(c11)), "0");
  const RingContext c20(2, 0);
  EXPECT_EQ(to_string(P("x2^2 + x1*x2 + x1^2", c20)), "x1^2 + x1*x2 + x2^2");
  EXPECT_EQ(to_string(P("-x1^-1*x2^-1", c20)), "-x1^-1*x2^-1");
  // Explicit unit exponents and coefficients are accepted and dropped.
  EXPECT_EQ(to_string(P("1*x1^1*x2^1", c20)), "x1*x2");
}

TEST(Polyring, ParseErrors) {
  const RingContext ctx(1, 1);
  EXPECT_EQ(kind_of([&] { P("x1^^2", ctx); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([&] { P("x2", ctx); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([&] { P("(x1)", ctx); }), ErrorKind::parse_error);
}

TEST(Polyring, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  const RingContext ctx(2, 2);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly f = random_poly(rng, ctx, 6);
    EXPECT_EQ(parse_poly(to_string(f), ctx), f);
  }
}

TEST(Polyring, MultiplicationAgreesWithEvaluation) {
  std::mt19937_64 rng(11);
  const RingContext ctx(2, 1);
  const auto points = oracle::sample_points(3);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly f = random_poly(rng, ctx, 5);
    const LaurentPoly g = random_poly(rng, ctx, 4);
    for (const auto& at : points) {
      EXPECT_EQ(oracle::eval(f * g, at), oracle::eval(f, at) * oracle::eval(g, at));
      EXPECT_EQ(oracle::eval(f + g, at), oracle::eval(f, at) + oracle::eval(g, at));
      EXPECT_EQ(oracle::eval(f - g, at), oracle::eval(f, at) - oracle::eval(g, at));
    }
  }
}

TEST(Polyring, RingAxioms) {
  std::mt19937_64 rng(3);
  const RingContext ctx(1, 2);
  const LaurentPoly one = LaurentPoly::one(ctx);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_poly(rng, ctx, 4);
    const LaurentPoly b = random_poly(rng, ctx, 4);
    const LaurentPoly c = random_poly(rng, ctx, 3);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polyring, ExactDivisionUndoesMultiplication) {
  std::mt19937_64 rng(5);
  const RingContext ctx(2, 1);
  for (int i = 0; i < 60; ++i) {
    const LaurentPoly a = random_poly(rng, ctx, 4);
    const LaurentPoly b = random_poly(rng, ctx, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
  const LaurentPoly diff = P("x1 - x2", ctx);
  EXPECT_EQ(divide_by_binomial(P("x1^2 - x2^2", ctx), Variable::x(0), Variable::x(1)), P("x1 + x2", ctx));
  EXPECT_EQ(kind_of([&] { exact_divide(P("x1 + 1", ctx), diff); }), ErrorKind::not_divisible);
}

TEST(Polyring, Substitution) {
  const RingContext ctx(2, 1);
  EXPECT_EQ(substitute(P("x1^2", ctx), Variable::x(0), P("x1", ctx)), P("x1^2", ctx));
  EXPECT_EQ(substitute(P("x1^-1*y1 + x2", ctx), Variable::x(0), P("y1", ctx)), P("1 + x2", ctx));
  EXPECT_EQ(kind_of([&] { substitute(P("x1^-1", ctx), Variable::x(0), P("x2 + 1", ctx)); }),
            ErrorKind::non_invertible_substitution);
}

TEST(Polyring, StarAndEulerDerivative) {
  const RingContext ctx(1, 1);
  EXPECT_EQ(star(P("x1^2 - 3*x1^-1*y1", ctx)), P("x1^-2 - 3*x1*y1^-1", ctx));
  EXPECT_EQ(euler_derivative(P("x1^3*y1 + x1^-2", ctx), Variable::x(0)), P("3*x1^3*y1 - 2*x1^-2", ctx));
}

TEST(Polyring, SymmetryAndComponents) {
  const RingContext ctx(2, 0);
  EXPECT_TRUE(is_symmetric(P("x1*x2 + x1 + x2", ctx)));
  EXPECT_FALSE(is_symmetric(P("x1", ctx)));
  const auto parts = homogeneous_components(P("x1^2 + x2 + 3", ctx));
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], P("x1^2", ctx));
  EXPECT_EQ(parts[2], P("3", ctx));
}

TEST(Polyring, RemapAcrossContexts) {
  const RingContext small(1, 1);
  const RingContext big(2, 1);
  const std::vector<Variable> xs{Variable::x(1)};
  const std::vector<Variable> ys{Variable::y(0)};
  EXPECT_EQ(remap_variables(P("x1 - y1", small), big, xs, ys), P("x2 - y1", big));
}

TEST(Polyring, ContextMismatchAndExponentRange) {
  EXPECT_EQ(kind_of([] { (void)(LaurentPoly::one(RingContext(1, 0)) + LaurentPoly::one(RingContext(2, 0))); }),
            ErrorKind::context_mismatch);
  const RingContext ctx(1, 0);
  EXPECT_EQ(kind_of([&] { (void)power(P("x1^200", ctx), 200); }), ErrorKind::size_exceeded);
}
