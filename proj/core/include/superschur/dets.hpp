#pragma once

// Determinants with ring-element entries: R_I(z), Jacobi-Trudi type forms,
// composite Schur determinants and their conjugate duals, and the mixed
// (h*, H, h) determinant K_{lambda,mu}.

#include <gmpxx.h>

#include "superschur/determinant.hpp"
#include "superschur/genfun.hpp"
#include "superschur/partition.hpp"
#include "superschur/polyring.hpp"

namespace superschur {

inline constexpr int kMaxDeterminantSize = 8;

/// Exact determinant of a square matrix of size <= 8.
/// Throws size_exceeded above that and invalid_index for non-square input.
LaurentPoly det_poly(const Matrix<LaurentPoly>& matrix, const RingContext& ctx);

/// R_I(z) = det(z(i_alpha + beta - 1)), alpha, beta = 1..|I|.
LaurentPoly r_det(const IntSeq& indices, const SeqProvider& z);

/// det(z(lambda_i - i + j)) of size `size`; lambda is padded with zeros.
/// Throws invalid_index when size < len(lambda).
LaurentPoly jacobi_trudi(const IntSeq& lambda, int size, const SeqProvider& z);
/// jacobi_trudi over H_k of `ctx`.
LaurentPoly jacobi_trudi_E(const IntSeq& lambda, int size, const RingContext& ctx);

/// Block determinant with s = l(top) rows z*(top_{s+1-a} + a - j) followed
/// by r = l(bottom) rows z(bottom_b - (s+b) + j), size r + s.
LaurentPoly composite_determinant(const Partition& top, const Partition& bottom, const SeqProvider& zstar,
                                  const SeqProvider& z);

/// Composite Schur function: composite_determinant(nu, tau) over (h*, h).
/// Requires n = 0 and l(tau) + l(nu) <= m.
LaurentPoly composite_schur(const Partition& tau, const Partition& nu, const RingContext& ctx);
/// Conjugate form over (e*, e): composite_determinant(nu', tau').
LaurentPoly dual_composite(const Partition& tau, const Partition& nu, const RingContext& ctx);
/// The integer sequence (tau, 0, ..., 0, -nu reversed) of length m.
IntSeq composite_index(const Partition& tau, const Partition& nu, int m);

/// Compares the (a*, a) composite determinant on (nu, mu) with
/// (-1)^{|nu|+|mu|} times the (b*, b) determinant on (nu', mu').
/// Throws convention_violated unless a_0 = b_0 = a*_0 = b*_0 = 1, all four
/// vanish at the negative indices probed, and both pairs are mutually
/// inverse up to the largest index probed. Finite-window providers throw
/// size_exceeded when the window is too shallow.
bool conj_duality_check(const SeqProvider& a, const SeqProvider& b, const SeqProvider& astar, const SeqProvider& bstar,
                        const Partition& nu, const Partition& mu);
/// Largest index either side of conj_duality_check evaluates.
int conj_duality_depth(const Partition& nu, const Partition& mu);

/// For an n x (n+1) integer matrix A and 1 <= l <= n+1: det A^(l) equals the
/// sum over |I| = l-1 of det A(I). Throws invalid_index on bad shape or l.
bool minor_sum_check(const Matrix<mpz_class>& a, int l);
mpz_class det_integer(const Matrix<mpz_class>& matrix);

/// K_{lambda,mu}: the mixed determinant with nu_1 rows h*, len(lambda) rows H
/// and tau_1 rows h, where mu = (tau, 0..0, -nu reversed). Throws
/// invalid_index unless (lambda, mu) lies in X(m, n).
LaurentPoly kac_K(const IntSeq& lambda, const IntSeq& mu, const RingContext& ctx);
LaurentPoly kac_K(const IntSeq& lambda, const IntSeq& mu, const GeneratorTable& table);

struct BasisIndex {
  IntSeq I;
  IntSeq J;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// (I, J) with I strictly decreasing, J >= 0, |I| <= m, |J| <= n,
/// |I| - |J| = m - n.
bool in_x_plus(const BasisIndex& idx, int m, int n);
/// As in_x_plus, except the last entry of J may be any integer.
bool in_x_pm(const BasisIndex& idx, int m, int n);
/// Non-increasing lambda, mu with len <= m, n and len difference m - n.
bool in_x_kac(const IntSeq& lambda, const IntSeq& mu, int m, int n);

}  // namespace superschur
