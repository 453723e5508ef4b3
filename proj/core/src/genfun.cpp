#include "superschur/genfun.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "superschur/determinant.hpp"
#include "superschur/errors.hpp"

namespace superschur {

const LaurentPoly& SeriesWindow::at(int k) const {
  if (!contains(k)) {
    throw Error(ErrorKind::size_exceeded,
                "t^" + std::to_string(k) + " outside series window [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return coeffs[static_cast<std::size_t>(k - lo)];
}

namespace {

// Multiplies a truncated power series (coefficients t^0..t^hi) in place.
void times_geometric(std::vector<LaurentPoly>& series, const LaurentPoly& v) {
  // s'[k] = s[k] + v s'[k-1]
  for (std::size_t k = 1; k < series.size(); ++k) series[k] += v * series[k - 1];
}

void times_linear(std::vector<LaurentPoly>& series, const LaurentPoly& v, int sign) {
  // s'[k] = s[k] + sign * v s[k-1]
  for (std::size_t k = series.size(); k-- > 1;) {
    if (sign > 0) {
      series[k] += v * series[k - 1];
    } else {
      series[k] -= v * series[k - 1];
    }
  }
}

std::vector<LaurentPoly> unit_series(const RingContext& ctx, int hi) {
  std::vector<LaurentPoly> series(static_cast<std::size_t>(std::max(hi, 0) + 1), LaurentPoly(ctx));
  series[0] = LaurentPoly::one(ctx);
  return series;
}

}  // namespace

SeriesWindow generating_series(const RingContext& ctx, int hi) {
  SeriesWindow window;
  window.lo = 0;
  window.hi = hi;
  if (hi < 0) return window;
  auto series = unit_series(ctx, hi);
  for (int i = 0; i < ctx.m; ++i) times_geometric(series, LaurentPoly::variable(ctx, Variable::x(i)));
  for (int j = 0; j < ctx.n; ++j) times_linear(series, LaurentPoly::variable(ctx, Variable::y(j)), -1);
  window.coeffs = std::move(series);
  return window;
}

LaurentPoly delta_ratio(const RingContext& ctx) {
  Monomial mono;
  for (int i = 0; i < ctx.m; ++i) mono[i] = -1;
  for (int j = 0; j < ctx.n; ++j) mono[ctx.m + j] = 1;
  return LaurentPoly::monomial(ctx, mono);
}

LaurentPoly complete_h(int k, const RingContext& ctx) {
  if (k < 0) return LaurentPoly(ctx);
  return generating_series(ctx, k).at(k);
}

LaurentPoly dual_h(int k, const RingContext& ctx) { return star(complete_h(k, ctx)); }

LaurentPoly h_infinity(int k, const RingContext& ctx) {
  const int r = ctx.n - ctx.m - k;
  if (r < 0) return LaurentPoly(ctx);
  LaurentPoly out = delta_ratio(ctx) * dual_h(r, ctx);
  if ((ctx.n - ctx.m) % 2 != 0) out = -out;
  return out;
}

LaurentPoly big_H(int k, const RingContext& ctx) { return complete_h(k, ctx) - h_infinity(k, ctx); }

LaurentPoly elementary_e(int k, Sector sector, const RingContext& ctx) {
  const int size = ctx.sector_size(sector);
  if (k < 0 || k > size) return LaurentPoly(ctx);
  auto series = unit_series(ctx, k);
  for (int i = 0; i < size; ++i) times_linear(series, LaurentPoly::variable(ctx, {sector, i}), +1);
  return series[static_cast<std::size_t>(k)];
}

LaurentPoly sector_complete_h(int k, Sector sector, const RingContext& ctx) {
  if (k < 0) return LaurentPoly(ctx);
  auto series = unit_series(ctx, k);
  for (int i = 0; i < ctx.sector_size(sector); ++i) times_geometric(series, LaurentPoly::variable(ctx, {sector, i}));
  return series[static_cast<std::size_t>(k)];
}

LaurentPoly schur_s(const Partition& lambda, Sector sector, const RingContext& ctx) {
  const int size = lambda.length();
  const int top = size == 0 ? 0 : lambda.part(1) + size - 1;
  std::vector<LaurentPoly> h;
  h.reserve(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) h.push_back(sector_complete_h(k, sector, ctx));
  Matrix<LaurentPoly> matrix(static_cast<std::size_t>(size));
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      const int idx = lambda.part(i) - i + j;
      matrix[static_cast<std::size_t>(i - 1)].push_back(idx < 0 ? LaurentPoly(ctx) : h[static_cast<std::size_t>(idx)]);
    }
  }
  return laplace_determinant(matrix, LaurentPoly(ctx), LaurentPoly::one(ctx));
}

// ---------------------------------------------------------------------------

GeneratorTable::GeneratorTable(const RingContext& ctx, int lo, int hi) : ctx_(ctx), lo_(lo), hi_(hi) {
  const int delta = ctx.n - ctx.m;
  const int depth = std::max({0, hi, delta - lo});
  auto series = generating_series(ctx, depth);
  h_ = std::move(series.coeffs);
  hstar_.reserve(h_.size());
  for (const auto& p : h_) hstar_.push_back(star(p));
  const LaurentPoly signed_delta = (delta % 2 != 0) ? -delta_ratio(ctx) : delta_ratio(ctx);
  for (int k = lo; k <= hi; ++k) {
    LaurentPoly value = h(k);
    const int r = delta - k;
    if (r >= 0) value -= signed_delta * hstar_[static_cast<std::size_t>(r)];
    H_.push_back(std::move(value));
  }
}

LaurentPoly GeneratorTable::h(int k) const {
  if (k < 0) return LaurentPoly(ctx_);
  if (static_cast<std::size_t>(k) < h_.size()) return h_[static_cast<std::size_t>(k)];
  return complete_h(k, ctx_);
}

LaurentPoly GeneratorTable::hstar(int k) const {
  if (k < 0) return LaurentPoly(ctx_);
  if (static_cast<std::size_t>(k) < hstar_.size()) return hstar_[static_cast<std::size_t>(k)];
  return dual_h(k, ctx_);
}

LaurentPoly GeneratorTable::H(int k) const {
  if (k >= lo_ && k <= hi_) return H_[static_cast<std::size_t>(k - lo_)];
  return superschur::big_H(k, ctx_);
}

// ---------------------------------------------------------------------------

SeqProvider::SeqProvider(RingContext ctx, Rule rule, std::string name)
    : ctx_(ctx), rule_(std::move(rule)), name_(std::move(name)) {}

SeqProvider SeqProvider::with_unit_convention(RingContext ctx, Rule positive_part, std::string name) {
  Rule rule = [ctx, positive_part = std::move(positive_part)](int k) {
    if (k < 0) return LaurentPoly(ctx);
    if (k == 0) return LaurentPoly::one(ctx);
    return positive_part(k);
  };
  return SeqProvider(ctx, std::move(rule), std::move(name));
}

SeqProvider SeqProvider::from_coefficients(RingContext ctx, std::vector<LaurentPoly> coeffs, std::string name) {
  auto shared = std::make_shared<const std::vector<LaurentPoly>>(std::move(coeffs));
  Rule rule = [ctx, shared, name](int k) {
    if (k < 0) return LaurentPoly(ctx);
    if (static_cast<std::size_t>(k) >= shared->size()) {
      throw Error(ErrorKind::size_exceeded, "index " + std::to_string(k) + " beyond the depth of series " + name);
    }
    return (*shared)[static_cast<std::size_t>(k)];
  };
  return SeqProvider(ctx, std::move(rule), std::move(name));
}

SeqProvider SeqProvider::big_H(const GeneratorTable& table) {
  auto shared = std::make_shared<const GeneratorTable>(table);
  return SeqProvider(table.context(), [shared](int k) { return shared->H(k); }, "H");
}

SeqProvider SeqProvider::complete_h(const GeneratorTable& table) {
  auto shared = std::make_shared<const GeneratorTable>(table);
  return with_unit_convention(table.context(), [shared](int k) { return shared->h(k); }, "h");
}

SeqProvider SeqProvider::dual_h(const GeneratorTable& table) {
  auto shared = std::make_shared<const GeneratorTable>(table);
  return with_unit_convention(table.context(), [shared](int k) { return shared->hstar(k); }, "h*");
}

SeqProvider SeqProvider::elementary_e(const RingContext& ctx, Sector sector) {
  return with_unit_convention(ctx, [ctx, sector](int k) { return superschur::elementary_e(k, sector, ctx); }, "e");
}

SeqProvider SeqProvider::dual_elementary_e(const RingContext& ctx, Sector sector) {
  return with_unit_convention(ctx, [ctx, sector](int k) { return star(superschur::elementary_e(k, sector, ctx)); },
                              "e*");
}

}  // namespace superschur
