#pragma once

// Generator families read off the generating function
//
//     prod_j (1 - y_j t) / prod_i (1 - x_i t)
//
// expanded at t = 0 (h_k) and at t = infinity (h_k^(inf)), together with the
// derived families h*_k, H_k = h_k - h_k^(inf), e_k and classical Schur
// polynomials.

#include <functional>
#include <string>
#include <vector>

#include "superschur/partition.hpp"
#include "superschur/polyring.hpp"

namespace superschur {

/// Default truncation depth for precomputed generator tables.
inline constexpr int kDefaultSeriesDepth = 8;

/// Coefficients of t^k for lo <= k <= hi.
struct SeriesWindow {
  int lo = 0;
  int hi = -1;
  std::vector<LaurentPoly> coeffs;

  bool contains(int k) const noexcept { return k >= lo && k <= hi; }
  /// Throws ErrorKind::size_exceeded outside the window.
  const LaurentPoly& at(int k) const;
};

/// Expansion at zero of the generating function, coefficients t^0..t^hi.
SeriesWindow generating_series(const RingContext& ctx, int hi);

/// Delta = (y_1 ... y_n) / (x_1 ... x_m).
LaurentPoly delta_ratio(const RingContext& ctx);

/// h_k; zero for k < 0.
LaurentPoly complete_h(int k, const RingContext& ctx);
/// h*_k = h_k(x^{-1}, y^{-1}); zero for k < 0.
LaurentPoly dual_h(int k, const RingContext& ctx);
/// h_k^(inf) = (-1)^{n-m} Delta h*_{n-m-k}; nonzero only for k <= n - m.
LaurentPoly h_infinity(int k, const RingContext& ctx);
/// H_k = h_k - h_k^(inf).
LaurentPoly big_H(int k, const RingContext& ctx);

/// e_k of one sector; zero outside 0..sector size.
LaurentPoly elementary_e(int k, Sector sector, const RingContext& ctx);
/// Complete homogeneous h_k of one sector alone (all coefficients positive).
LaurentPoly sector_complete_h(int k, Sector sector, const RingContext& ctx);
/// Classical Schur polynomial det(h_{lambda_i - i + j}) over one sector.
LaurentPoly schur_s(const Partition& lambda, Sector sector, const RingContext& ctx);

/// h_k, h*_k and H_k precomputed for a range of k. Lookups outside the range
/// are computed on demand and not stored, so a table is safe to share.
class GeneratorTable {
 public:
  explicit GeneratorTable(const RingContext& ctx, int lo = -kDefaultSeriesDepth, int hi = kDefaultSeriesDepth);

  const RingContext& context() const noexcept { return ctx_; }
  LaurentPoly h(int k) const;
  LaurentPoly hstar(int k) const;
  LaurentPoly H(int k) const;

 private:
  RingContext ctx_;
  int lo_;
  int hi_;
  std::vector<LaurentPoly> h_;      // h_0 .. h_{depth}
  std::vector<LaurentPoly> hstar_;  // h*_0 .. h*_{depth}
  std::vector<LaurentPoly> H_;      // H_lo .. H_hi
};

/// An integer-indexed sequence of ring elements, the input to every
/// determinant of R_I / Jacobi-Trudi type. The unit convention (value 1 at
/// index 0 and 0 at negative indices) lives here and nowhere else.
class SeqProvider {
 public:
  using Rule = std::function<LaurentPoly(int)>;

  SeqProvider(RingContext ctx, Rule rule, std::string name = "z");

  /// Applies the unit convention around `positive_part`, which is only
  /// consulted for k >= 1.
  static SeqProvider with_unit_convention(RingContext ctx, Rule positive_part, std::string name = "z");
  /// Finite window a_0..a_N with a_k = 0 for k < 0. Indices beyond N throw
  /// ErrorKind::size_exceeded.
  static SeqProvider from_coefficients(RingContext ctx, std::vector<LaurentPoly> coeffs, std::string name = "a");

  static SeqProvider big_H(const GeneratorTable& table);
  static SeqProvider complete_h(const GeneratorTable& table);
  static SeqProvider dual_h(const GeneratorTable& table);
  static SeqProvider elementary_e(const RingContext& ctx, Sector sector);
  static SeqProvider dual_elementary_e(const RingContext& ctx, Sector sector);

  LaurentPoly operator()(int k) const { return rule_(k); }
  const RingContext& context() const noexcept { return ctx_; }
  const std::string& name() const noexcept { return name_; }
  LaurentPoly zero() const { return LaurentPoly(ctx_); }

 private:
  RingContext ctx_;
  Rule rule_;
  std::string name_;
};

}  // namespace superschur
