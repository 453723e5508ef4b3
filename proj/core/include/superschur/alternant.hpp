#pragma once

// Alternation over S_m x S_n and the characters defined as alternant
// quotients: Euler characters E_lambda, the D_+/D_- weighted characters, and
// the product form of Kac characters.

#include <cstdint>
#include <functional>
#include <span>

#include "superschur/partition.hpp"
#include "superschur/polyring.hpp"

namespace superschur {

inline constexpr std::uint64_t kDefaultPermutationBudget = 10'000'000;

/// m! * n! limit for alternation; SUPERSCHUR_BUDGET overrides the default.
std::uint64_t permutation_budget();

/// Visits every permutation of {0..size-1} with its sign (+1 / -1). Uses
/// Heap's algorithm, so consecutive permutations differ by one swap.
void for_each_signed_permutation(int size, const std::function<void(std::span<const int>, int)>& visit);

/// Sum over (sigma, tau) in S_m x S_n of sgn(sigma) sgn(tau) f(sigma x, tau y).
/// Throws ErrorKind::budget_exceeded when m! n! exceeds the budget.
LaurentPoly alternate(const LaurentPoly& f, const RingContext& ctx);
/// Alternation over the symmetric group of one sector only.
LaurentPoly alternate_sector(const LaurentPoly& f, Sector sector, const RingContext& ctx);

/// prod_{i<j} (v_i - v_j) over one sector.
LaurentPoly vandermonde(Sector sector, const RingContext& ctx);
/// Exact quotient by the Vandermonde product of one sector, one binomial at a
/// time.
LaurentPoly divide_by_vandermonde(const LaurentPoly& f, Sector sector, const RingContext& ctx);

/// v_1^{k-1} v_2^{k-2} ... v_k^0 for the sector of size k.
Monomial staircase(Sector sector, const RingContext& ctx);

/// E_lambda of one sector: alternant of v^{lambda + rho} divided by the
/// Vandermonde product. `lambda` must have the sector's length.
LaurentPoly sector_character(const IntSeq& lambda, Sector sector, const RingContext& ctx);

/// E_lambda over the x-sector; length(lambda) must equal m.
LaurentPoly euler_E(const IntSeq& lambda, const RingContext& ctx);

/// Euler character weighted by D_+ = [1,p] x [1,n] and D_- = [p+1,m] x [1,q]
/// with p = len(lambda), q = len(mu), signed by (-1)^{|tau|+|nu|} from the
/// split of mu. Requires p <= m and q <= n.
LaurentPoly euler_D(const IntSeq& lambda, const IntSeq& mu, const RingContext& ctx);

/// (-1)^{|tau|+|nu|} prod_{i,j}(1 - y_j/x_i) E_lambda(x) E_mu(y) for
/// full-length non-increasing lambda (length m) and mu (length n).
LaurentPoly kac_product(const IntSeq& lambda, const IntSeq& mu, const RingContext& ctx);

/// prod_{i<=m, j<=n} (1 - y_j / x_i).
LaurentPoly kac_factor(const RingContext& ctx);

}  // namespace superschur
