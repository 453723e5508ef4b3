#include "linalg.hpp"

#include <algorithm>

namespace superschur::linalg {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(product & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(product >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e) {
    if (e & 1U) out = mul_mod(out, base);
    base = mul_mod(base, base);
    e >>= 1U;
  }
  return out;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t reduce(const mpz_class& c) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(kPrime)));
}

// Incremental row echelon form modulo the prime. Returns the pivot column of
// each row that turned out independent of its predecessors.
struct ModEchelon {
  std::size_t width;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;

  bool add(std::vector<std::uint64_t> row) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t factor = row[pivots[r]];
      if (factor == 0) continue;
      const auto& basis = rows[r];
      for (std::size_t c = 0; c < width; ++c) {
        if (basis[c] != 0) row[c] = sub_mod(row[c], mul_mod(factor, basis[c]));
      }
    }
    const auto it = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
    if (it == row.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
    const std::uint64_t inv = inv_mod(row[pivot]);
    for (auto& v : row) v = mul_mod(v, inv);
    rows.push_back(std::move(row));
    pivots.push_back(pivot);
    return true;
  }
};

std::vector<std::uint64_t> dense_mod(const std::vector<std::pair<std::size_t, mpz_class>>& sparse, std::size_t width) {
  std::vector<std::uint64_t> out(width, 0);
  for (const auto& [col, value] : sparse) out[col] = reduce(value);
  return out;
}

std::size_t exact_rank(const Coordinates& coords) {
  const std::size_t width = coords.columns.size();
  std::vector<std::vector<mpz_class>> m(coords.rows.size(), std::vector<mpz_class>(width));
  for (std::size_t r = 0; r < coords.rows.size(); ++r) {
    for (const auto& [col, value] : coords.rows[r]) m[r][col] = value;
  }
  // Bareiss elimination.
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < width && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < width; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]);
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      m[r][col] = 0;
    }
    previous = m[rank][col];
    ++rank;
  }
  return rank;
}

// Nonsingular square integer system, solved by fraction-free elimination
// followed by rational back substitution.
std::optional<std::vector<mpq_class>> solve_square(std::vector<std::vector<mpz_class>> a, std::vector<mpz_class> b) {
  const std::size_t k = a.size();
  mpz_class previous = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      for (std::size_t c = col + 1; c < k; ++c) {
        a[r][c] = a[col][col] * a[r][c] - a[r][col] * a[col][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      b[r] = a[col][col] * b[r] - a[r][col] * b[col];
      mpz_divexact(b[r].get_mpz_t(), b[r].get_mpz_t(), previous.get_mpz_t());
      a[r][col] = 0;
    }
    previous = a[col][col];
  }
  std::vector<mpq_class> x(k);
  for (std::size_t i = k; i-- > 0;) {
    mpq_class acc(b[i]);
    for (std::size_t j = i + 1; j < k; ++j) acc -= mpq_class(a[i][j]) * x[j];
    x[i] = acc / mpq_class(a[i][i]);
    x[i].canonicalize();
  }
  return x;
}

// General system over Q; free variables are set to zero.
std::optional<std::vector<mpq_class>> solve_general(const Coordinates& coords, const LaurentPoly& target) {
  const std::size_t k = coords.rows.size();
  const std::size_t height = coords.columns.size();
  std::vector<std::vector<mpq_class>> m(height, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [col, value] : coords.rows[i]) m[col][i] = value;
  }
  for (const auto& t : target.terms()) m[coords.column_of.at(t.monomial)][k] = t.coeff;
  std::vector<std::size_t> pivot_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < height; ++col) {
    std::size_t pivot = row;
    while (pivot < height && m[pivot][col] == 0) ++pivot;
    if (pivot == height) continue;
    std::swap(m[pivot], m[row]);
    const mpq_class inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < height; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < height; ++r) {
    if (m[r][k] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(k);
  for (std::size_t r = 0; r < row; ++r) x[pivot_of_row[r]] = m[r][k];
  return x;
}

bool reproduces(const std::vector<const LaurentPoly*>& family, const std::vector<mpq_class>& c,
                const LaurentPoly& target) {
  mpz_class denominator = 1;
  for (const auto& v : c) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), v.get_den_mpz_t());
  LaurentPoly sum = target * mpz_class(0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (c[i] == 0) continue;
    const mpz_class scaled = c[i].get_num() * (denominator / c[i].get_den());
    sum += *family[i] * scaled;
  }
  return sum == target * denominator;
}

}  // namespace

Coordinates coordinates(const std::vector<const LaurentPoly*>& family) {
  Coordinates out;
  out.rows.reserve(family.size());
  for (const LaurentPoly* f : family) {
    std::vector<std::pair<std::size_t, mpz_class>> row;
    row.reserve(f->size());
    for (const auto& t : f->terms()) {
      auto [it, inserted] = out.column_of.try_emplace(t.monomial, out.columns.size());
      if (inserted) out.columns.push_back(t.monomial);
      row.emplace_back(it->second, t.coeff);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::optional<std::vector<std::size_t>> pivot_columns_mod_p(const Coordinates& coords) {
  ModEchelon echelon{coords.columns.size(), {}, {}};
  for (const auto& row : coords.rows) {
    if (!echelon.add(dense_mod(row, coords.columns.size()))) return std::nullopt;
  }
  return echelon.pivots;
}

std::size_t rank(const Coordinates& coords) {
  ModEchelon echelon{coords.columns.size(), {}, {}};
  for (const auto& row : coords.rows) echelon.add(dense_mod(row, coords.columns.size()));
  if (echelon.rows.size() == coords.rows.size()) return echelon.rows.size();
  return exact_rank(coords);
}

std::optional<std::vector<mpq_class>> solve(const std::vector<const LaurentPoly*>& family, const LaurentPoly& target) {
  const Coordinates coords = coordinates(family);
  for (const auto& t : target.terms()) {
    if (!coords.column_of.contains(t.monomial)) return std::nullopt;
  }
  if (family.empty()) {
    if (target.is_zero()) return std::vector<mpq_class>{};
    return std::nullopt;
  }
  std::optional<std::vector<mpq_class>> x;
  if (const auto pivots = pivot_columns_mod_p(coords)) {
    const std::size_t k = family.size();
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    std::vector<mpz_class> b(k);
    std::vector<std::size_t> row_of_column(coords.columns.size(), k);
    for (std::size_t r = 0; r < k; ++r) row_of_column[(*pivots)[r]] = r;
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& [col, value] : coords.rows[i]) {
        if (row_of_column[col] < k) a[row_of_column[col]][i] = value;
      }
    }
    for (std::size_t r = 0; r < k; ++r) b[r] = target.coefficient(coords.columns[(*pivots)[r]]);
    x = solve_square(std::move(a), std::move(b));
  } else {
    x = solve_general(coords, target);
  }
  if (!x || !reproduces(family, *x, target)) return std::nullopt;
  return x;
}

}  // namespace superschur::linalg
