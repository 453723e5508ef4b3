#include <gtest/gtest.h>

#include "superschur/errors.hpp"
#include "superschur/rings.hpp"
#include "superschur/suites.hpp"

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

}  // namespace

TEST(Rings, Names) {
  EXPECT_EQ(ring_name(RingContext::laurent(2, 1)), "Lambda^pm_{2,1}");
  EXPECT_EQ(ring_name(RingContext::partially_polynomial(1, 1)), "Lambda^{+y}_{1,1}");
  EXPECT_EQ(ring_name(RingContext::polynomial(2, 2)), "Lambda_{2,2}");
}

TEST(Rings, Supersymmetry) {
  const RingContext c22(2, 2);
  for (int k = -3; k <= 3; ++k) EXPECT_TRUE(is_supersymmetric(big_H(k, c22), c22)) << k;
  const RingContext c11(1, 1);
  EXPECT_FALSE(is_supersymmetric(P("x1", c11), c11));
  EXPECT_FALSE(is_supersymmetric(P("x1 + y1", c11), c11));
  EXPECT_TRUE(is_supersymmetric(P("x1 - y1", c11), c11));
  EXPECT_TRUE(is_supersymmetric(P("x1^-1*y1", c11), c11));
  // Symmetric in each sector but the cancellation fails.
  EXPECT_FALSE(is_supersymmetric(P("x1*x2 + y1*y2", c22), c22));
  const RingContext plus = RingContext::partially_polynomial(1, 1);
  EXPECT_EQ(kind_of([&] { is_supersymmetric(P("y1^-1*x1", plus), plus); }), ErrorKind::sector_violation);
  EXPECT_EQ(kind_of([&] { is_supersymmetric(P("x1", c11), c22); }), ErrorKind::context_mismatch);
}

TEST(Rings, BasisElementsAndDegrees) {
  const RingContext c10 = RingContext::partially_polynomial(1, 0);
  for (int k = -3; k <= 3; ++k) {
    EXPECT_EQ(basis_element({{k}, {}}, BasisKind::x_plus, c10), LaurentPoly::variable(c10, Variable::x(0), k));
  }
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const Window w{2, 4};
      const std::vector<std::pair<RingContext, BasisKind>> cases{
          {RingContext::laurent(m, n), BasisKind::x_pm},
          {RingContext::laurent(m, n), BasisKind::kac},
          {RingContext::partially_polynomial(m, n), BasisKind::x_plus},
          {RingContext::polynomial(m, n), BasisKind::admissible}};
      for (const auto& [ctx, kind] : cases) {
        const BasisCatalog catalog(kind, ctx, w);
        for (std::size_t i = 0; i < catalog.size(); ++i) {
          const auto d = catalog.elements()[i].homogeneous_degree();
          ASSERT_TRUE(d.has_value()) << ring_name(ctx);
          EXPECT_EQ(*d, catalog.degrees()[i]);
          EXPECT_LE(std::abs(*d), w.degree_bound);
        }
      }
    }
  }
}

TEST(Rings, BasisErrors) {
  const RingContext poly = RingContext::polynomial(1, 1);
  EXPECT_EQ(kind_of([&] { enumerate_basis(BasisKind::kac, poly, Window{}); }), ErrorKind::invalid_context);
  const RingContext c21(2, 1);
  EXPECT_EQ(kind_of([&] { basis_element({{1, 1}, {0}}, BasisKind::x_plus, c21); }), ErrorKind::invalid_index);
  EXPECT_EQ(kind_of([&] { basis_element({{2, 1}, {-1}}, BasisKind::x_plus, c21); }), ErrorKind::invalid_index);
  EXPECT_NO_THROW(basis_element({{2, 1}, {-1}}, BasisKind::x_pm, c21));
  // Admissible indices stay above n - m.
  const RingContext p12 = RingContext::polynomial(1, 2);
  EXPECT_EQ(kind_of([&] { basis_element({{1}, {0, 0}}, BasisKind::admissible, p12); }), ErrorKind::invalid_index);
}

// Worked by hand: at (1,1), H_k = x1^{k-1}(x1 - y1) and Delta = y1/x1 has
// degree 0, so H_2 H_1 = x1^2 (x1 - y1)(1 - y1/x1) = H_3 - H_3 Delta.
TEST(Rings, ExpandByHand) {
  const RingContext ctx(1, 1);
  const BasisCatalog catalog(BasisKind::x_pm, ctx, Window{});
  const auto coeffs = expand_in_basis(big_H(2, ctx) * big_H(1, ctx), catalog);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& index = catalog.indices()[i];
    if (index == BasisIndex{{3}, {0}}) {
      EXPECT_EQ(coeffs[i], 1);
    } else if (index == BasisIndex{{3}, {1}}) {
      EXPECT_EQ(coeffs[i], -1);
    } else {
      EXPECT_EQ(coeffs[i], 0) << to_string(index.I) << ";" << to_string(index.J);
    }
  }
}

TEST(Rings, ExpandUnitVectorsAndErrors) {
  const RingContext ctx = RingContext::partially_polynomial(2, 1);
  const BasisCatalog catalog(BasisKind::x_plus, ctx, Window{2, 3});
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto coeffs = expand_in_basis(catalog.elements()[i], catalog);
    for (std::size_t j = 0; j < coeffs.size(); ++j) EXPECT_EQ(coeffs[j], i == j ? 1 : 0);
  }
  EXPECT_TRUE(expand_in_basis(LaurentPoly(ctx), catalog) == std::vector<mpq_class>(catalog.size()));

  const RingContext c11(1, 1);
  EXPECT_EQ(kind_of([&] { expand_in_basis(P("x1", c11), BasisKind::x_pm, c11, Window{}); }), ErrorKind::not_in_ring);
  // H_5 needs I = (5), outside a window of 4.
  EXPECT_EQ(kind_of([&] { expand_in_basis(big_H(5, c11), BasisKind::x_pm, c11, Window{4, 6}); }),
            ErrorKind::not_in_span);
}

TEST(Rings, RankOf) {
  const RingContext ctx(2, 0);
  EXPECT_EQ(rank_of({P("x1 + x2", ctx), P("x1", ctx), P("x2", ctx)}), 2U);
  EXPECT_EQ(rank_of({}), 0U);
  EXPECT_EQ(rank_of({P("3*x1^2 - x2", ctx), P("6*x1^2 - 2*x2", ctx)}), 1U);
}

TEST(Rings, SmallPresentationsAndTensor) {
  for (auto kind : {PresentationKind::u_plus, PresentationKind::u, PresentationKind::u_pm}) {
    const Report r = verify_presentation(RingContext(1, 1), kind, Window{2, 4});
    EXPECT_TRUE(r.ok()) << to_string(kind) << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.instances_checked, 0);
  }
  const Report t = check_tensor_iso(1, 2, Window{2, 4});
  EXPECT_TRUE(t.ok()) << (t.failures.empty() ? "" : t.failures.front());
  EXPECT_EQ(kind_of([] { check_tensor_iso(2, 1, Window{}); }), ErrorKind::invalid_context);
}

TEST(Rings, SuiteRegistry) {
  EXPECT_EQ(suite_names().size(), 11U);
  EXPECT_EQ(kind_of([] { run_suite("nope", SuiteOptions{}); }), ErrorKind::invalid_index);
  SuiteOptions o;
  o.m = 2;
  o.n = 1;
  o.window = Window{2, 4};
  o.trials = 10;
  EXPECT_TRUE(run_suite("jacobi-trudi", o).ok());
}
