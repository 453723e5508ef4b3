#pragma once

// Laplace expansion over an arbitrary commutative ring element type.
//
// Rows are processed sparsest first; minors are shared across branches by
// indexing partial expansions with the set of columns already used, so an
// n x n determinant costs O(2^n * n) ring multiplications instead of O(n!).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace superschur {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
bool is_zero_element(const T& value) {
  if constexpr (requires { value.is_zero(); }) {
    return value.is_zero();
  } else {
    return value == 0;
  }
}

}  // namespace detail

/// Determinant of a square matrix. `zero` and `one` supply the identities of
/// the element ring (LaurentPoly needs its context). Size is capped at 24 by
/// the bitmask representation; callers impose tighter limits.
template <class T>
T laplace_determinant(const Matrix<T>& matrix, const T& zero, const T& one) {
  const std::size_t size = matrix.size();
  if (size == 0) return one;
  for (const auto& row : matrix) {
    if (row.size() != size) return zero;  // callers validate shape first
  }

  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> zeros(size, 0);
  for (std::size_t r = 0; r < size; ++r) {
    zeros[r] = static_cast<std::size_t>(
        std::count_if(matrix[r].begin(), matrix[r].end(), [](const T& v) { return detail::is_zero_element(v); }));
    if (zeros[r] == size) return zero;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return zeros[a] > zeros[b]; });
  // Sign of the row reordering.
  bool negate = false;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (order[i] > order[j]) negate = !negate;
    }
  }

  const std::uint32_t full = (std::uint32_t{1} << size) - 1;
  std::vector<std::optional<T>> partial(std::size_t{1} << size);
  partial[0] = one;
  std::vector<std::uint32_t> frontier{0};
  for (std::size_t level = 0; level < size; ++level) {
    const auto& row = matrix[order[level]];
    std::vector<std::uint32_t> next;
    for (std::uint32_t used : frontier) {
      const T& acc = *partial[used];
      for (std::size_t c = 0; c < size; ++c) {
        const std::uint32_t bit = std::uint32_t{1} << c;
        if ((used & bit) != 0 || detail::is_zero_element(row[c])) continue;
        // Inversions added by placing column c after the columns in `used`.
        const int inversions = std::popcount(used & ~((bit << 1) - 1));
        T product = acc * row[c];
        const std::uint32_t key = used | bit;
        auto& slot = partial[key];
        if (!slot) {
          next.push_back(key);
          if (inversions % 2 == 0) {
            slot = std::move(product);
          } else {
            slot = T(zero - product);
          }
        } else if (inversions % 2 == 0) {
          *slot += product;
        } else {
          *slot -= product;
        }
      }
      if (used != full) partial[used].reset();
    }
    frontier.clear();
    for (std::uint32_t key : next) {
      if (!detail::is_zero_element(*partial[key])) {
        frontier.push_back(key);
      } else {
        partial[key].reset();
      }
    }
    if (frontier.empty()) return zero;
  }
  T result = partial[full] ? *partial[full] : zero;
  if (negate) return T(zero - result);
  return result;
}

}  // namespace superschur
