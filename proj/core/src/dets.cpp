#include "superschur/dets.hpp"

#include <algorithm>
#include <string>

#include "superschur/errors.hpp"

namespace superschur {

namespace {

void require_size(std::size_t size, const char* what) {
  if (size > static_cast<std::size_t>(kMaxDeterminantSize)) {
    throw Error(ErrorKind::size_exceeded, std::string(what) + ": size " + std::to_string(size) + " exceeds " +
                                              std::to_string(kMaxDeterminantSize));
  }
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

LaurentPoly det_poly(const Matrix<LaurentPoly>& matrix, const RingContext& ctx) {
  require_size(matrix.size(), "det_poly");
  for (const auto& row : matrix) {
    if (row.size() != matrix.size()) throw Error(ErrorKind::invalid_index, "det_poly: matrix is not square");
  }
  return laplace_determinant(matrix, LaurentPoly(ctx), LaurentPoly::one(ctx));
}

LaurentPoly r_det(const IntSeq& indices, const SeqProvider& z) {
  const int p = static_cast<int>(indices.size());
  require_size(indices.size(), "R_I");
  Matrix<LaurentPoly> matrix(idx(p));
  for (int a = 0; a < p; ++a) {
    matrix[idx(a)].reserve(idx(p));
    for (int b = 0; b < p; ++b) matrix[idx(a)].push_back(z(indices[idx(a)] + b));
  }
  return det_poly(matrix, z.context());
}

LaurentPoly jacobi_trudi(const IntSeq& lambda, int size, const SeqProvider& z) {
  if (size < static_cast<int>(lambda.size())) {
    throw Error(ErrorKind::invalid_index, "Jacobi-Trudi size " + std::to_string(size) + " shorter than " +
                                              to_string(lambda));
  }
  require_size(idx(size), "Jacobi-Trudi");
  Matrix<LaurentPoly> matrix(idx(size));
  for (int i = 1; i <= size; ++i) {
    const int li = i <= static_cast<int>(lambda.size()) ? lambda[idx(i - 1)] : 0;
    for (int j = 1; j <= size; ++j) matrix[idx(i - 1)].push_back(z(li - i + j));
  }
  return det_poly(matrix, z.context());
}

LaurentPoly jacobi_trudi_E(const IntSeq& lambda, int size, const RingContext& ctx) {
  return jacobi_trudi(lambda, size, SeqProvider::big_H(GeneratorTable(ctx)));
}

LaurentPoly composite_determinant(const Partition& top, const Partition& bottom, const SeqProvider& zstar,
                                  const SeqProvider& z) {
  const int s = top.length();
  const int r = bottom.length();
  const int size = r + s;
  require_size(idx(size), "composite determinant");
  Matrix<LaurentPoly> matrix(idx(size));
  for (int a = 1; a <= s; ++a) {
    for (int j = 1; j <= size; ++j) matrix[idx(a - 1)].push_back(zstar(top.part(s + 1 - a) + a - j));
  }
  for (int b = 1; b <= r; ++b) {
    for (int j = 1; j <= size; ++j) matrix[idx(s + b - 1)].push_back(z(bottom.part(b) - (s + b) + j));
  }
  return det_poly(matrix, z.context());
}

namespace {

void require_composite_domain(const Partition& tau, const Partition& nu, const RingContext& ctx) {
  if (ctx.n != 0) throw Error(ErrorKind::invalid_context, "composite Schur functions need n = 0");
  if (tau.length() + nu.length() > ctx.m) {
    throw Error(ErrorKind::invalid_index, "l(tau) + l(nu) exceeds m = " + std::to_string(ctx.m));
  }
}

}  // namespace

IntSeq composite_index(const Partition& tau, const Partition& nu, int m) {
  IntSeq out(idx(m), 0);
  for (int i = 1; i <= tau.length(); ++i) out[idx(i - 1)] = tau.part(i);
  for (int i = 1; i <= nu.length(); ++i) out[idx(m - i)] = -nu.part(i);
  return out;
}

LaurentPoly composite_schur(const Partition& tau, const Partition& nu, const RingContext& ctx) {
  require_composite_domain(tau, nu, ctx);
  const GeneratorTable table(ctx, 0, std::max(tau.part(1), nu.part(1)) + tau.length() + nu.length());
  return composite_determinant(nu, tau, SeqProvider::dual_h(table), SeqProvider::complete_h(table));
}

LaurentPoly dual_composite(const Partition& tau, const Partition& nu, const RingContext& ctx) {
  require_composite_domain(tau, nu, ctx);
  return composite_determinant(nu.conjugate(), tau.conjugate(), SeqProvider::dual_elementary_e(ctx, Sector::x),
                               SeqProvider::elementary_e(ctx, Sector::x));
}

int conj_duality_depth(const Partition& nu, const Partition& mu) {
  return std::max({0, nu.part(1) + nu.length() - 1, mu.part(1) + mu.length() - 1});
}

namespace {

void require_inverse_pair(const SeqProvider& f, const SeqProvider& g, int depth, int lowest) {
  if (!f(0).is_one() || !g(0).is_one()) {
    throw Error(ErrorKind::convention_violated, f.name() + "/" + g.name() + ": value at 0 must be 1");
  }
  for (int k = lowest; k < 0; ++k) {
    if (!f(k).is_zero() || !g(k).is_zero()) {
      throw Error(ErrorKind::convention_violated,
                  f.name() + "/" + g.name() + ": nonzero value at index " + std::to_string(k));
    }
  }
  std::vector<LaurentPoly> fs;
  std::vector<LaurentPoly> gs;
  for (int k = 0; k <= depth; ++k) {
    fs.push_back(f(k));
    gs.push_back(g(k));
  }
  for (int k = 1; k <= depth; ++k) {
    LaurentPoly sum = f.zero();
    for (int i = 0; i <= k; ++i) sum += fs[idx(i)] * gs[idx(k - i)];
    if (!sum.is_zero()) {
      throw Error(ErrorKind::convention_violated,
                  f.name() + "*" + g.name() + " is not 1 at t^" + std::to_string(k));
    }
  }
}

}  // namespace

bool conj_duality_check(const SeqProvider& a, const SeqProvider& b, const SeqProvider& astar, const SeqProvider& bstar,
                        const Partition& nu, const Partition& mu) {
  const int depth = conj_duality_depth(nu, mu);
  const int lowest = -std::max(nu.length() + mu.length(), nu.part(1) + mu.part(1));
  require_inverse_pair(a, b, depth, lowest);
  require_inverse_pair(astar, bstar, depth, lowest);
  const LaurentPoly lhs = composite_determinant(nu, mu, astar, a);
  LaurentPoly rhs = composite_determinant(nu.conjugate(), mu.conjugate(), bstar, b);
  if ((nu.weight() + mu.weight()) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

mpz_class det_integer(const Matrix<mpz_class>& matrix) {
  return laplace_determinant(matrix, mpz_class(0), mpz_class(1));
}

bool minor_sum_check(const Matrix<mpz_class>& a, int l) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n + 1) throw Error(ErrorKind::invalid_index, "matrix must be n x (n+1)");
  }
  if (l < 1 || l > n + 1) throw Error(ErrorKind::invalid_index, "column index out of range");
  if (n > 20) throw Error(ErrorKind::size_exceeded, "minor_sum_check: n too large");

  auto drop_column = [&](int col) {  // 1-based
    Matrix<mpz_class> out(idx(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= n; ++j) {
        if (j != col - 1) out[idx(i)].push_back(a[idx(i)][idx(j)]);
      }
    }
    return out;
  };
  const Matrix<mpz_class> first = drop_column(1);
  const Matrix<mpz_class> last = drop_column(n + 1);

  mpz_class sum = 0;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    if (std::popcount(subset) != l - 1) continue;
    Matrix<mpz_class> mixed(idx(n));
    for (int i = 0; i < n; ++i) mixed[idx(i)] = ((subset >> i) & 1U) ? last[idx(i)] : first[idx(i)];
    sum += det_integer(mixed);
  }
  return det_integer(drop_column(l)) == sum;
}

bool in_x_kac(const IntSeq& lambda, const IntSeq& mu, int m, int n) {
  const int p = static_cast<int>(lambda.size());
  const int q = static_cast<int>(mu.size());
  return is_non_increasing(lambda) && is_non_increasing(mu) && p <= m && q <= n && p - q == m - n;
}

LaurentPoly kac_K(const IntSeq& lambda, const IntSeq& mu, const RingContext& ctx) {
  return kac_K(lambda, mu, GeneratorTable(ctx));
}

LaurentPoly kac_K(const IntSeq& lambda, const IntSeq& mu, const GeneratorTable& table) {
  const RingContext& ctx = table.context();
  if (!in_x_kac(lambda, mu, ctx.m, ctx.n)) {
    throw Error(ErrorKind::invalid_index, "(" + to_string(lambda) + ", " + to_string(mu) + ") is not in X(" +
                                              std::to_string(ctx.m) + "," + std::to_string(ctx.n) + ")");
  }
  const SignedSplit split = split_signed(mu);
  const Partition tau_c = split.positive.conjugate();
  const Partition nu_c = split.negative.conjugate();
  const int k = nu_c.length();
  const int p = static_cast<int>(lambda.size());
  const int l = tau_c.length();
  const int size = k + p + l;
  require_size(idx(size), "K_{lambda,mu}");

  // sigma = (nu'_k, ..., nu'_1, lambda_1, ..., lambda_p, tau'_1, ..., tau'_l)
  Matrix<LaurentPoly> matrix(idx(size));
  for (int i = 1; i <= size; ++i) {
    auto& row = matrix[idx(i - 1)];
    row.reserve(idx(size));
    for (int j = 1; j <= size; ++j) {
      if (i <= k) {
        row.push_back(table.hstar(nu_c.part(k + 1 - i) + i - j));
      } else if (i <= k + p) {
        row.push_back(table.H(lambda[idx(i - k - 1)] - i + j));
      } else {
        row.push_back(table.h(tau_c.part(i - k - p) - i + j));
      }
    }
  }
  return det_poly(matrix, ctx);
}

bool in_x_plus(const BasisIndex& index, int m, int n) {
  const int p = static_cast<int>(index.I.size());
  const int q = static_cast<int>(index.J.size());
  if (p > m || q > n || p - q != m - n || !is_strictly_decreasing(index.I)) return false;
  return std::all_of(index.J.begin(), index.J.end(), [](int j) { return j >= 0; });
}

bool in_x_pm(const BasisIndex& index, int m, int n) {
  const int p = static_cast<int>(index.I.size());
  const int q = static_cast<int>(index.J.size());
  if (p > m || q > n || p - q != m - n || !is_strictly_decreasing(index.I)) return false;
  return q == 0 || std::all_of(index.J.begin(), index.J.end() - 1, [](int j) { return j >= 0; });
}

}  // namespace superschur
