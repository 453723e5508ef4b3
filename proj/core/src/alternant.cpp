#include "superschur/alternant.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "superschur/errors.hpp"

namespace superschur {

std::uint64_t permutation_budget() {
  if (const char* env = std::getenv("SUPERSCHUR_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return value;
  }
  return kDefaultPermutationBudget;
}

void for_each_signed_permutation(int size, const std::function<void(std::span<const int>, int)>& visit) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(size, 0)));
  std::iota(perm.begin(), perm.end(), 0);
  int sign = 1;
  visit(perm, sign);
  // Iterative Heap's algorithm.
  std::vector<int> counter(perm.size(), 0);
  std::size_t i = 1;
  while (i < perm.size()) {
    if (counter[i] < static_cast<int>(i)) {
      if (i % 2 == 0) {
        std::swap(perm[0], perm[i]);
      } else {
        std::swap(perm[static_cast<std::size_t>(counter[i])], perm[i]);
      }
      sign = -sign;
      visit(perm, sign);
      ++counter[i];
      i = 1;
    } else {
      counter[i] = 0;
      ++i;
    }
  }
}

namespace {

std::uint64_t factorial_capped(int k, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) {
    if (out > cap / static_cast<std::uint64_t>(i)) return cap + 1;
    out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

void check_budget(int m, int n) {
  const std::uint64_t budget = permutation_budget();
  const std::uint64_t fm = factorial_capped(m, budget);
  const std::uint64_t fn = factorial_capped(n, budget);
  if (fm > budget || fn > budget || (fn != 0 && fm > budget / fn)) {
    throw Error(ErrorKind::budget_exceeded, "alternation over S_" + std::to_string(m) + " x S_" + std::to_string(n) +
                                                " exceeds the permutation budget " + std::to_string(budget));
  }
}

struct SignedPerm {
  std::vector<int> image;
  int sign;
};

std::vector<SignedPerm> all_permutations(int size) {
  std::vector<SignedPerm> out;
  for_each_signed_permutation(size, [&](std::span<const int> perm, int sign) {
    out.push_back(SignedPerm{{perm.begin(), perm.end()}, sign});
  });
  return out;
}

LaurentPoly alternate_impl(const LaurentPoly& f, int m, int n, bool permute_x, bool permute_y) {
  if (f.m() != m || f.n() != n) throw Error(ErrorKind::context_mismatch, "alternate: context mismatch");
  check_budget(permute_x ? m : 0, permute_y ? n : 0);
  const auto xperms = all_permutations(permute_x ? m : 0);
  const auto yperms = all_permutations(permute_y ? n : 0);
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(f.size() * xperms.size() * yperms.size());
  for (const auto& xp : xperms) {
    for (const auto& yp : yperms) {
      const int sign = xp.sign * yp.sign;
      for (const auto& t : f.terms()) {
        Monomial mono;
        for (int i = 0; i < m; ++i) {
          const int target = permute_x ? xp.image[static_cast<std::size_t>(i)] : i;
          mono[target] = t.monomial[i];
        }
        for (int j = 0; j < n; ++j) {
          const int target = permute_y ? yp.image[static_cast<std::size_t>(j)] : j;
          mono[m + target] = t.monomial[m + j];
        }
        auto& c = acc[mono];
        if (sign > 0) {
          c += t.coeff;
        } else {
          c -= t.coeff;
        }
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) terms.push_back(Term{mono, std::move(c)});
  }
  return LaurentPoly::from_terms(m, n, std::move(terms));
}

}  // namespace

LaurentPoly alternate(const LaurentPoly& f, const RingContext& ctx) {
  return alternate_impl(f, ctx.m, ctx.n, true, true);
}

LaurentPoly alternate_sector(const LaurentPoly& f, Sector sector, const RingContext& ctx) {
  return alternate_impl(f, ctx.m, ctx.n, sector == Sector::x, sector == Sector::y);
}

LaurentPoly vandermonde(Sector sector, const RingContext& ctx) {
  LaurentPoly out = LaurentPoly::one(ctx);
  const int size = ctx.sector_size(sector);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      out *= LaurentPoly::variable(ctx, {sector, i}) - LaurentPoly::variable(ctx, {sector, j});
    }
  }
  return out;
}

LaurentPoly divide_by_vandermonde(const LaurentPoly& f, Sector sector, const RingContext& ctx) {
  LaurentPoly out = f;
  const int size = ctx.sector_size(sector);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) out = divide_by_binomial(out, {sector, i}, {sector, j});
  }
  return out;
}

Monomial staircase(Sector sector, const RingContext& ctx) {
  Monomial mono;
  const int size = ctx.sector_size(sector);
  const int base = sector == Sector::x ? 0 : ctx.m;
  for (int i = 0; i < size; ++i) mono[base + i] = static_cast<Monomial::Exponent>(size - 1 - i);
  return mono;
}

LaurentPoly sector_character(const IntSeq& lambda, Sector sector, const RingContext& ctx) {
  const int size = ctx.sector_size(sector);
  if (static_cast<int>(lambda.size()) != size) {
    throw Error(ErrorKind::invalid_index, "character index " + to_string(lambda) + " needs length " +
                                              std::to_string(size));
  }
  Monomial mono = staircase(sector, ctx);
  const int base = sector == Sector::x ? 0 : ctx.m;
  for (int i = 0; i < size; ++i) {
    mono[base + i] = static_cast<Monomial::Exponent>(mono[base + i] + lambda[static_cast<std::size_t>(i)]);
  }
  const LaurentPoly numerator = alternate_sector(LaurentPoly::monomial(ctx, mono), sector, ctx);
  return divide_by_vandermonde(numerator, sector, ctx);
}

LaurentPoly euler_E(const IntSeq& lambda, const RingContext& ctx) {
  return sector_character(lambda, Sector::x, ctx);
}

LaurentPoly kac_factor(const RingContext& ctx) {
  LaurentPoly out = LaurentPoly::one(ctx);
  for (int i = 0; i < ctx.m; ++i) {
    for (int j = 0; j < ctx.n; ++j) {
      Monomial ratio;
      ratio[i] = -1;
      ratio[ctx.m + j] = 1;
      out *= LaurentPoly::one(ctx) - LaurentPoly::monomial(ctx, ratio);
    }
  }
  return out;
}

namespace {

int split_sign(const IntSeq& mu) {
  const SignedSplit split = split_signed(mu);
  return (split.positive.weight() + split.negative.weight()) % 2 == 0 ? 1 : -1;
}

}  // namespace

LaurentPoly euler_D(const IntSeq& lambda, const IntSeq& mu, const RingContext& ctx) {
  const int p = static_cast<int>(lambda.size());
  const int q = static_cast<int>(mu.size());
  if (p > ctx.m || q > ctx.n) {
    throw Error(ErrorKind::invalid_index, "euler_D needs len(lambda) <= m and len(mu) <= n");
  }
  const int sign = split_sign(mu);

  LaurentPoly product = LaurentPoly::one(ctx);
  const LaurentPoly one = LaurentPoly::one(ctx);
  for (int i = 0; i < ctx.m; ++i) {
    const int cols = i < p ? ctx.n : q;
    for (int j = 0; j < cols; ++j) {
      Monomial ratio;
      // (1 - y_j/x_i) on D_+, (1 - x_i/y_j) on D_-
      ratio[i] = static_cast<Monomial::Exponent>(i < p ? -1 : 1);
      ratio[ctx.m + j] = static_cast<Monomial::Exponent>(i < p ? 1 : -1);
      product *= one - LaurentPoly::monomial(ctx, ratio);
    }
  }
  Monomial weight = staircase(Sector::x, ctx) * staircase(Sector::y, ctx);
  for (int i = 0; i < p; ++i) {
    weight[i] = static_cast<Monomial::Exponent>(weight[i] + lambda[static_cast<std::size_t>(i)]);
  }
  for (int j = 0; j < q; ++j) {
    weight[ctx.m + j] = static_cast<Monomial::Exponent>(weight[ctx.m + j] + mu[static_cast<std::size_t>(j)]);
  }
  product *= LaurentPoly::monomial(ctx, weight, sign);
  const LaurentPoly numerator = alternate(product, ctx);
  return divide_by_vandermonde(divide_by_vandermonde(numerator, Sector::x, ctx), Sector::y, ctx);
}

LaurentPoly kac_product(const IntSeq& lambda, const IntSeq& mu, const RingContext& ctx) {
  if (static_cast<int>(lambda.size()) != ctx.m || static_cast<int>(mu.size()) != ctx.n || !is_non_increasing(lambda) ||
      !is_non_increasing(mu)) {
    throw Error(ErrorKind::invalid_index, "kac_product needs non-increasing lambda of length m and mu of length n, got " +
                                              to_string(lambda) + ", " + to_string(mu));
  }
  LaurentPoly out = kac_factor(ctx) * sector_character(lambda, Sector::x, ctx) * sector_character(mu, Sector::y, ctx);
  if (split_sign(mu) < 0) out = -out;
  return out;
}

}  // namespace superschur
