#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superschur/alternant.hpp"
#include "superschur/dets.hpp"
#include "superschur/errors.hpp"

using namespace superschur;

namespace {

LaurentPoly P(const char* text, const RingContext& ctx) { return parse_poly(text, ctx); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::parse_error;
}

// det(A^(1) + a A^(n+1)) as a polynomial in a, by Leibniz expansion.
std::vector<mpz_class> pencil_determinant(const Matrix<mpz_class>& a) {
  const std::size_t n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<mpz_class> out(n + 1, 0);
  do {
    // Each factor is A[i][perm_i + 1] + a A[i][perm_i].
    std::vector<mpz_class> prod{mpz_class(oracle::sign_of(perm))};
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = static_cast<std::size_t>(perm[i]);
      std::vector<mpz_class> next(prod.size() + 1, 0);
      for (std::size_t d = 0; d < prod.size(); ++d) {
        next[d] += prod[d] * a[i][c + 1];
        next[d + 1] += prod[d] * a[i][c];
      }
      prod = std::move(next);
    }
    for (std::size_t d = 0; d < prod.size(); ++d) out[d] += prod[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

mpz_class leibniz_z(const Matrix<mpz_class>& a) {
  std::vector<std::vector<mpq_class>> q;
  for (const auto& row : a) q.emplace_back(row.begin(), row.end());
  return oracle::leibniz(q).get_num();
}

}  // namespace

TEST(Dets, SmallDeterminants) {
  const RingContext c20(2, 0);
  const LaurentPoly x1 = P("x1", c20);
  const LaurentPoly x2 = P("x2", c20);
  EXPECT_EQ(det_poly({{x1}}, c20), x1);
  EXPECT_EQ(det_poly({{x1, x2}, {x2, x1}}, c20), P("x1^2 - x2^2", c20));
  const LaurentPoly one = LaurentPoly::one(c20);
  const LaurentPoly zero(c20);
  EXPECT_TRUE(det_poly({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}, c20).is_one());
  EXPECT_EQ(kind_of([&] { det_poly({{one, zero}}, c20); }), ErrorKind::invalid_index);
  const Matrix<LaurentPoly> big(9, std::vector<LaurentPoly>(9, one));
  EXPECT_EQ(kind_of([&] { det_poly(big, c20); }), ErrorKind::size_exceeded);
}

TEST(Dets, DeterminantAgreesWithEvaluatedLeibniz) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> e(-1, 2);
  std::uniform_int_distribution<int> c(-3, 3);
  const RingContext ctx(2, 1);
  const auto points = oracle::sample_points(3);
  for (int size = 1; size <= 5; ++size) {
    Matrix<LaurentPoly> m(static_cast<std::size_t>(size));
    for (auto& row : m) {
      for (int j = 0; j < size; ++j) {
        std::vector<Term> terms;
        for (int t = 0; t < 2; ++t) {
          Monomial mono;
          for (int s = 0; s < 3; ++s) mono[s] = static_cast<Monomial::Exponent>(e(rng));
          terms.push_back(Term{mono, c(rng)});
        }
        row.push_back(LaurentPoly::from_terms(2, 1, std::move(terms)));
      }
    }
    const LaurentPoly det = det_poly(m, ctx);
    for (const auto& at : points) {
      std::vector<std::vector<mpq_class>> q;
      for (const auto& row : m) {
        q.emplace_back();
        for (const auto& f : row) q.back().push_back(oracle::eval(f, at));
      }
      EXPECT_EQ(oracle::eval(det, at), oracle::leibniz(q)) << size;
    }
  }
}

TEST(Dets, RDeterminant) {
  const RingContext ctx(2, 1);
  const GeneratorTable table(ctx);
  const auto H = SeqProvider::big_H(table);
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(r_det({k}, H), big_H(k, ctx));
  EXPECT_TRUE(r_det({2, 2}, H).is_zero());
  // R_I and the Jacobi-Trudi form index the same matrix.
  EXPECT_EQ(r_det({3, 0}, H), jacobi_trudi({3, 1}, 2, H));
}

TEST(Dets, JacobiTrudiExamples) {
  const RingContext c10(1, 0);
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= a; ++b) EXPECT_TRUE(jacobi_trudi_E({a, b}, 2, c10).is_zero());
  }
  const RingContext c30(3, 0);
  EXPECT_EQ(jacobi_trudi_E({2, 1}, 3, c30), jacobi_trudi_E({2, 1}, 2, c30));
  EXPECT_EQ(jacobi_trudi_E({2, 1, 0}, 3, c30), euler_E({2, 1, 0}, c30));
  EXPECT_EQ(kind_of([&] { jacobi_trudi_E({1, 1, 1, 1}, 3, c30); }), ErrorKind::invalid_index);
}

TEST(Dets, CompositeExamples) {
  const RingContext c20(2, 0);
  EXPECT_TRUE(composite_schur(Partition(), Partition(), c20).is_one());
  EXPECT_EQ(composite_schur(Partition({1}), Partition(), c20), P("x1 + x2", c20));
  EXPECT_EQ(composite_schur(Partition(), Partition({1}), c20), P("x1^-1 + x2^-1", c20));
  EXPECT_EQ(dual_composite(Partition(), Partition({1}), c20), P("x1^-1 + x2^-1", c20));
  EXPECT_EQ(dual_composite(Partition({2}), Partition({1}), c20), euler_E({2, -1}, c20));
  EXPECT_EQ(composite_index(Partition({2}), Partition({3, 1}), 4), (IntSeq{2, 0, -1, -3}));
  EXPECT_EQ(kind_of([&] { composite_schur(Partition({1}), Partition(), RingContext(2, 1)); }),
            ErrorKind::invalid_context);
  EXPECT_EQ(kind_of([&] { composite_schur(Partition({1, 1}), Partition({1}), c20); }), ErrorKind::invalid_index);
}

TEST(Dets, ConjugateDualityClassicalPair) {
  const RingContext ctx(3, 0);
  const GeneratorTable table(ctx);
  auto signed_e = [ctx](bool dual) {
    return SeqProvider::with_unit_convention(ctx, [ctx, dual](int k) {
      LaurentPoly e = elementary_e(k, Sector::x, ctx);
      if (dual) e = star(e);
      return k % 2 == 0 ? e : -e;
    });
  };
  const auto h = SeqProvider::complete_h(table);
  const auto hs = SeqProvider::dual_h(table);
  EXPECT_TRUE(conj_duality_check(h, signed_e(false), hs, signed_e(true), Partition(), Partition()));
  EXPECT_TRUE(conj_duality_check(h, signed_e(false), hs, signed_e(true), Partition(), Partition({2, 1})));
  EXPECT_TRUE(conj_duality_check(h, signed_e(false), hs, signed_e(true), Partition({2}), Partition({1, 1})));
  // h paired with itself is not an inverse pair.
  EXPECT_EQ(kind_of([&] { conj_duality_check(h, h, hs, hs, Partition({1}), Partition({1})); }),
            ErrorKind::convention_violated);
}

TEST(Dets, ConjugateDualityShallowWindow) {
  const RingContext ctx(1, 0);
  std::vector<LaurentPoly> a{LaurentPoly::one(ctx), LaurentPoly::constant(ctx, 2)};
  std::vector<LaurentPoly> b{LaurentPoly::one(ctx), LaurentPoly::constant(ctx, -2)};
  const auto fa = SeqProvider::from_coefficients(ctx, a);
  const auto fb = SeqProvider::from_coefficients(ctx, b);
  EXPECT_EQ(kind_of([&] { conj_duality_check(fa, fb, fa, fb, Partition({3}), Partition({2})); }),
            ErrorKind::size_exceeded);
}

TEST(Dets, MinorSumAgainstPencil) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    Matrix<mpz_class> a(static_cast<std::size_t>(n));
    for (auto& row : a) {
      for (int c = 0; c <= n; ++c) row.emplace_back(entry(rng));
    }
    const auto pencil = pencil_determinant(a);
    for (int l = 1; l <= n + 1; ++l) {
      Matrix<mpz_class> dropped(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        for (int c = 0; c <= n; ++c) {
          if (c != l - 1) dropped[static_cast<std::size_t>(i)].push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
        }
      }
      EXPECT_EQ(leibniz_z(dropped), pencil[static_cast<std::size_t>(l - 1)]);
      EXPECT_EQ(det_integer(dropped), leibniz_z(dropped));
      EXPECT_TRUE(minor_sum_check(a, l));
    }
  }
  EXPECT_EQ(kind_of([] { minor_sum_check(Matrix<mpz_class>{{1, 2}}, 3); }), ErrorKind::invalid_index);
}

TEST(Dets, KacExamples) {
  const RingContext c11(1, 1);
  EXPECT_EQ(kac_K({0}, {0}, c11), P("1 - x1^-1*y1", c11));
  EXPECT_EQ(kind_of([&] { kac_K({0, 0}, {0}, c11); }), ErrorKind::invalid_index);
  // n = 0: the Jacobi-Trudi determinant.
  const RingContext c20(2, 0);
  EXPECT_EQ(kac_K({2, -1}, {}, c20), jacobi_trudi_E({2, -1}, 2, c20));
  // m = 0: a signed Euler character of the y-sector.
  const RingContext c02(0, 2);
  for (const auto& mu : non_increasing_sequences(2, -2, 2)) {
    const SignedSplit split = split_signed(mu);
    LaurentPoly expected = sector_character(mu, Sector::y, c02);
    if ((split.positive.weight() + split.negative.weight()) % 2 != 0) expected = -expected;
    EXPECT_EQ(kac_K({}, mu, c02), expected) << to_string(mu);
  }
}

TEST(Dets, BasisIndexMembership) {
  EXPECT_TRUE(in_x_plus({{3, 1}, {2}}, 2, 1));
  EXPECT_FALSE(in_x_plus({{1, 1}, {2}}, 2, 1));
  EXPECT_FALSE(in_x_plus({{3, 1}, {-2}}, 2, 1));
  EXPECT_TRUE(in_x_pm({{3, 1}, {-2}}, 2, 1));
  EXPECT_FALSE(in_x_pm({{3}, {-2, 1}}, 1, 2));
  EXPECT_TRUE(in_x_pm({{3}, {2, -1}}, 1, 2));
  EXPECT_TRUE(in_x_kac({1, 1}, {0}, 2, 1));
  EXPECT_FALSE(in_x_kac({1}, {0}, 2, 1));
}
