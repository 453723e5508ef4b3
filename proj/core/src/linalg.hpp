#pragma once

// Linear algebra over the monomial coordinates of Laurent polynomials.
// Internal to the library.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "superschur/polyring.hpp"

namespace superschur::linalg {

/// Dense coordinates of a family of polynomials: one row per polynomial,
/// one column per monomial in the union of their supports.
struct Coordinates {
  std::vector<Monomial> columns;
  std::unordered_map<Monomial, std::size_t, MonomialHash> column_of;
  std::vector<std::vector<std::pair<std::size_t, mpz_class>>> rows;  // sparse
};

Coordinates coordinates(const std::vector<const LaurentPoly*>& family);

/// Rank of the family over Q. Tries a 61-bit prime first: full rank there
/// means full rank over Q; anything less is confirmed with exact
/// fraction-free elimination.
std::size_t rank(const Coordinates& coords);

/// Monomial columns whose restriction makes the family's coordinate matrix
/// square and nonsingular modulo the prime, if the family is independent
/// there.
std::optional<std::vector<std::size_t>> pivot_columns_mod_p(const Coordinates& coords);

/// Solves sum_i c_i * family[i] = target exactly. Returns nullopt when the
/// target is outside the span.
std::optional<std::vector<mpq_class>> solve(const std::vector<const LaurentPoly*>& family, const LaurentPoly& target);

}  // namespace superschur::linalg
