#pragma once

// Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//
// Variables are split into two sectors: x_1..x_m and y_1..y_n. Exponents of
// both sectors are stored in one fixed-width array; x_i lives in slot i-1 and
// y_j in slot m+j-1. Every LaurentPoly is kept in canonical form: terms sorted
// by the term order below, no zero coefficients.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace superschur {

inline constexpr int kMaxVariables = 16;

enum class Sector { x, y };

std::string_view to_string(Sector sector) noexcept;

/// Variable counts plus the sector flags that select one of the rings
/// (both Laurent, x-Laurent only, or fully polynomial). The flags only affect
/// membership tests and basis enumeration; arithmetic always allows negative
/// exponents in both sectors.
struct RingContext {
  int m = 0;
  int n = 0;
  bool x_laurent = true;
  bool y_laurent = true;

  RingContext() = default;
  RingContext(int m, int n, bool x_laurent = true, bool y_laurent = true);

  static RingContext laurent(int m, int n) { return {m, n, true, true}; }
  static RingContext partially_polynomial(int m, int n) { return {m, n, true, false}; }
  static RingContext polynomial(int m, int n) { return {m, n, false, false}; }

  int variable_count() const noexcept { return m + n; }
  int sector_size(Sector sector) const noexcept { return sector == Sector::x ? m : n; }
  bool sector_laurent(Sector sector) const noexcept {
    return sector == Sector::x ? x_laurent : y_laurent;
  }

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

/// A variable x_{index+1} or y_{index+1}; index is zero-based.
struct Variable {
  Sector sector = Sector::x;
  int index = 0;

  static Variable x(int index) { return {Sector::x, index}; }
  static Variable y(int index) { return {Sector::y, index}; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() noexcept : exps_{} {}

  Exponent operator[](int slot) const noexcept { return exps_[static_cast<std::size_t>(slot)]; }
  Exponent& operator[](int slot) noexcept { return exps_[static_cast<std::size_t>(slot)]; }

  /// Total degree, the sum of all exponents.
  int degree() const noexcept;
  bool is_one() const noexcept;

  /// Throws ErrorKind::size_exceeded if an exponent leaves the int16 range.
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial inverse() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent slots.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& mono) const noexcept { return mono.hash(); }
};

/// Term order: graded lexicographic, descending. Higher total degree first;
/// ties broken lexicographically with x_1 most significant and the x-sector
/// ahead of the y-sector.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    return a > b;
  }
};

struct Term {
  Monomial monomial;
  mpz_class coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class LaurentPoly {
 public:
  /// The zero polynomial with no variables.
  LaurentPoly() = default;
  /// The zero polynomial in the variables of `ctx`.
  explicit LaurentPoly(const RingContext& ctx);

  static LaurentPoly constant(const RingContext& ctx, const mpz_class& value);
  static LaurentPoly one(const RingContext& ctx) { return constant(ctx, 1); }
  static LaurentPoly monomial(const RingContext& ctx, const Monomial& mono, const mpz_class& coeff = 1);
  static LaurentPoly variable(const RingContext& ctx, Variable var, int exponent = 1);
  /// Canonicalizes an arbitrary list of terms (sorts, merges, drops zeros).
  static LaurentPoly from_terms(int m, int n, std::vector<Term> terms);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  /// The single term of a monomial with coefficient +-1, if this is one.
  bool is_unit() const noexcept;

  /// Degree shared by all terms, or nullopt for zero and inhomogeneous input.
  std::optional<int> homogeneous_degree() const;
  /// Coefficient of `mono` (zero when absent).
  mpz_class coefficient(const Monomial& mono) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const mpz_class& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class& s) { return a *= s; }
  friend LaurentPoly operator*(const mpz_class& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  LaurentPoly(int m, int n, std::vector<Term> canonical_terms);
  void require_same_variables(const LaurentPoly& other) const;

  int m_ = 0;
  int n_ = 0;
  std::vector<Term> terms_;
};

/// Slot of `var` inside a Monomial for a poly with `m` x-variables.
inline int slot_of(Variable var, int m) noexcept {
  return var.sector == Sector::x ? var.index : m + var.index;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly power(const LaurentPoly& base, int exponent);

/// Exact quotient a / b. Throws ErrorKind::not_divisible when b does not
/// divide a. Binomials v_i - v_j take a linear-time path; everything else
/// goes through sparse long division.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / (u - v) for two distinct variables.
LaurentPoly divide_by_binomial(const LaurentPoly& a, Variable u, Variable v);

/// Ring homomorphism sending `target` to `g` and fixing other variables.
/// Negative powers of `target` require `g` to be a unit.
LaurentPoly substitute(const LaurentPoly& f, Variable target, const LaurentPoly& g);

/// Moves f into a context with `m` x- and `n` y-variables; variable x_i of f
/// becomes x_map[i] (resp. y_map). Maps may send variables across sectors.
LaurentPoly remap_variables(const LaurentPoly& f, const RingContext& target,
                            std::span<const Variable> x_map, std::span<const Variable> y_map);

/// Negates every exponent vector: f(x_1^{-1}, ..., y_n^{-1}).
LaurentPoly star(const LaurentPoly& f);

/// v * df/dv for the variable v.
LaurentPoly euler_derivative(const LaurentPoly& f, Variable v);

/// Invariance under S_m x S_n (checked on adjacent transpositions).
bool is_symmetric(const LaurentPoly& f);

/// Swaps two variables of the same sector.
LaurentPoly transpose_variables(const LaurentPoly& f, Variable a, Variable b);

/// Components by total degree, highest degree first.
std::vector<LaurentPoly> homogeneous_components(const LaurentPoly& f);

/// Component-wise exponent range over all terms; nullopt for zero.
struct ExponentBox {
  std::array<int, kMaxVariables> lo{};
  std::array<int, kMaxVariables> hi{};
};
std::optional<ExponentBox> exponent_box(const LaurentPoly& f);

/// Canonical text, e.g. "1 - x1^-1*y1" or "x1^2 + x1*x2 + x2^2".
std::string to_string(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// Parses the canonical grammar (and accepts explicit ^1 exponents, "1*"
/// prefixes, and arbitrary spacing). Throws ErrorKind::parse_error.
LaurentPoly parse_poly(std::string_view text, const RingContext& ctx);

}  // namespace superschur
