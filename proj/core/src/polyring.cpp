#include "superschur/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "superschur/errors.hpp"

namespace superschur {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_context: return "InvalidContext";
    case ErrorKind::context_mismatch: return "ContextMismatch";
    case ErrorKind::not_divisible: return "NotDivisible";
    case ErrorKind::non_invertible_substitution: return "NonInvertibleSubstitution";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::size_exceeded: return "SizeExceeded";
    case ErrorKind::invalid_index: return "InvalidIndex";
    case ErrorKind::convention_violated: return "ConventionViolated";
    case ErrorKind::sector_violation: return "SectorViolation";
    case ErrorKind::not_in_ring: return "NotInRing";
    case ErrorKind::not_in_span: return "NotInSpan";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Sector sector) noexcept { return sector == Sector::x ? "x" : "y"; }

RingContext::RingContext(int m_, int n_, bool x_laurent_, bool y_laurent_)
    : m(m_), n(n_), x_laurent(x_laurent_), y_laurent(y_laurent_) {
  if (m < 0 || n < 0 || m + n > kMaxVariables) {
    throw Error(ErrorKind::invalid_context, "need m, n >= 0 and m + n <= " + std::to_string(kMaxVariables) +
                                                ", got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

Monomial::Exponent checked_exponent(int value) {
  if (value < std::numeric_limits<Monomial::Exponent>::min() ||
      value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw Error(ErrorKind::size_exceeded, "exponent " + std::to_string(value) + " out of range");
  }
  return static_cast<Monomial::Exponent>(value);
}

}  // namespace

int Monomial::degree() const noexcept {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const int s = int{exps_[i]} + int{other.exps_[i]};
    out.exps_[i] = (s == static_cast<Exponent>(s)) ? static_cast<Exponent>(s) : checked_exponent(s);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const { return *this * other.inverse(); }

Monomial Monomial::inverse() const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_exponent(-int{exps_[i]});
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::array<std::uint64_t, sizeof(exps_) / 8> words{};
  std::memcpy(words.data(), exps_.data(), sizeof(exps_));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const RingContext& ctx) : m_(ctx.m), n_(ctx.n) {}

LaurentPoly::LaurentPoly(int m, int n, std::vector<Term> canonical_terms)
    : m_(m), n_(n), terms_(std::move(canonical_terms)) {}

LaurentPoly LaurentPoly::constant(const RingContext& ctx, const mpz_class& value) {
  return monomial(ctx, Monomial{}, value);
}

LaurentPoly LaurentPoly::monomial(const RingContext& ctx, const Monomial& mono, const mpz_class& coeff) {
  LaurentPoly out(ctx);
  if (coeff != 0) out.terms_.push_back(Term{mono, coeff});
  return out;
}

LaurentPoly LaurentPoly::variable(const RingContext& ctx, Variable var, int exponent) {
  if (var.index < 0 || var.index >= ctx.sector_size(var.sector)) {
    throw Error(ErrorKind::invalid_context, std::string("no variable ") + std::string(to_string(var.sector)) +
                                                std::to_string(var.index + 1) + " in context");
  }
  Monomial mono;
  mono[slot_of(var, ctx.m)] = checked_exponent(exponent);
  return monomial(ctx, mono);
}

LaurentPoly LaurentPoly::from_terms(int m, int n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return TermOrder{}(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentPoly(m, n, std::move(out));
}

bool LaurentPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

bool LaurentPoly::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

std::optional<int> LaurentPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().monomial.degree();
  if (terms_.back().monomial.degree() != d) return std::nullopt;
  return d;
}

mpz_class LaurentPoly::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& key) { return TermOrder{}(t.monomial, key); });
  if (it != terms_.end() && it->monomial == mono) return it->coeff;
  return 0;
}

void LaurentPoly::require_same_variables(const LaurentPoly& other) const {
  if (m_ != other.m_ || n_ != other.n_) {
    throw Error(ErrorKind::context_mismatch, "operands live in (" + std::to_string(m_) + "," + std::to_string(n_) +
                                                 ") and (" + std::to_string(other.m_) + "," +
                                                 std::to_string(other.n_) + ")");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merges two canonical term lists, b scaled by `sign` (+1 or -1).
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const TermOrder before;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && before(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || before(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = a[i].coeff;
      if (sign > 0) c += b[j].coeff; else c -= b[j].coeff;
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_variables(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_variables(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_variables(b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.m_, a.n_, {});
  // A single-term factor preserves the order of the other operand.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& single = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& other = a.terms_.size() == 1 ? b : a;
    const Term& s = single.terms_.front();
    std::vector<Term> out;
    out.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.push_back(Term{t.monomial * s.monomial, t.coeff * s.coeff});
    return LaurentPoly(a.m_, a.n_, std::move(out));
  }
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial);
      mpz_addmul(it->second.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) terms.push_back(Term{mono, std::move(coeff)});
  }
  return LaurentPoly::from_terms(a.m_, a.n_, std::move(terms));
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly power(const LaurentPoly& base, int exponent) {
  if (exponent < 0) {
    if (!base.is_unit()) {
      throw Error(ErrorKind::non_invertible_substitution, "negative power of a non-unit");
    }
    const Term& t = base.terms().front();
    RingContext ctx(base.m(), base.n());
    return power(LaurentPoly::monomial(ctx, t.monomial.inverse(), t.coeff), -exponent);
  }
  RingContext ctx(base.m(), base.n());
  LaurentPoly result = LaurentPoly::one(ctx);
  LaurentPoly square = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= square;
    if (e > 1) square = square * square;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Division

std::optional<ExponentBox> exponent_box(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  ExponentBox box;
  box.lo.fill(std::numeric_limits<int>::max());
  box.hi.fill(std::numeric_limits<int>::min());
  for (const auto& t : f.terms()) {
    for (int s = 0; s < kMaxVariables; ++s) {
      const int e = t.monomial[s];
      box.lo[static_cast<std::size_t>(s)] = std::min(box.lo[static_cast<std::size_t>(s)], e);
      box.hi[static_cast<std::size_t>(s)] = std::max(box.hi[static_cast<std::size_t>(s)], e);
    }
  }
  return box;
}

LaurentPoly divide_by_binomial(const LaurentPoly& a, Variable u, Variable v) {
  const int m = a.m();
  const int su = slot_of(u, m);
  const int sv = slot_of(v, m);
  if (su == sv) throw Error(ErrorKind::not_divisible, "division by zero binomial");
  if (a.is_zero()) return a;

  // Terms sharing every exponent except those of u and v, and the same sum
  // e_u + e_v, form a univariate Laurent polynomial in u/v. Division by
  // (u - v) is synthetic division by (z - 1) inside each such fiber.
  struct Entry {
    Monomial key;
    int sum;
    int eu;
    const mpz_class* coeff;
  };
  std::vector<Entry> entries;
  entries.reserve(a.size());
  for (const auto& t : a.terms()) {
    Monomial key = t.monomial;
    const int eu = key[su];
    const int ev = key[sv];
    key[su] = 0;
    key[sv] = 0;
    entries.push_back(Entry{key, eu + ev, eu, &t.coeff});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.key != y.key) return x.key < y.key;
    if (x.sum != y.sum) return x.sum < y.sum;
    return x.eu > y.eu;
  });

  std::vector<Term> out;
  std::size_t begin = 0;
  while (begin < entries.size()) {
    std::size_t end = begin;
    while (end < entries.size() && entries[end].key == entries[begin].key && entries[end].sum == entries[begin].sum) {
      ++end;
    }
    mpz_class running = 0;
    for (std::size_t idx = begin; idx < end; ++idx) {
      running += *entries[idx].coeff;
      if (idx + 1 == end) break;
      if (running == 0) continue;
      // q_j = running for j in [next_eu, eu - 1]
      for (int j = entries[idx].eu - 1; j >= entries[idx + 1].eu; --j) {
        Monomial mono = entries[begin].key;
        mono[su] = checked_exponent(j);
        mono[sv] = checked_exponent(entries[begin].sum - 1 - j);
        out.push_back(Term{mono, running});
      }
    }
    if (running != 0) {
      throw Error(ErrorKind::not_divisible, "nonzero remainder after division by a binomial");
    }
    begin = end;
  }
  return LaurentPoly::from_terms(a.m(), a.n(), std::move(out));
}

namespace {

// Recognizes b = v_i - v_j with both variables of exponent one.
std::optional<std::pair<Variable, Variable>> as_variable_difference(const LaurentPoly& b) {
  if (b.size() != 2) return std::nullopt;
  const auto& t0 = b.terms()[0];
  const auto& t1 = b.terms()[1];
  if (t0.coeff * t1.coeff != -1) return std::nullopt;
  auto single_variable = [&](const Monomial& mono) -> std::optional<Variable> {
    std::optional<Variable> found;
    for (int s = 0; s < b.m() + b.n(); ++s) {
      if (mono[s] == 0) continue;
      if (mono[s] != 1 || found) return std::nullopt;
      found = s < b.m() ? Variable::x(s) : Variable::y(s - b.m());
    }
    return found;
  };
  auto v0 = single_variable(t0.monomial);
  auto v1 = single_variable(t1.monomial);
  if (!v0 || !v1) return std::nullopt;
  if (t0.coeff == 1) return std::make_pair(*v0, *v1);
  return std::make_pair(*v1, *v0);
}

LaurentPoly long_divide(const LaurentPoly& a, const LaurentPoly& b) {
  const RingContext ctx(a.m(), a.n());
  if (a.is_zero()) return LaurentPoly(ctx);
  // The quotient's support lies in [lo(a) - lo(b), hi(a) - hi(b)] slot-wise,
  // which bounds the loop when b does not divide a.
  const auto box_a = *exponent_box(a);
  const auto box_b = *exponent_box(b);
  ExponentBox qbox;
  for (std::size_t s = 0; s < static_cast<std::size_t>(kMaxVariables); ++s) {
    qbox.lo[s] = box_a.lo[s] - box_b.lo[s];
    qbox.hi[s] = box_a.hi[s] - box_b.hi[s];
    if (qbox.lo[s] > qbox.hi[s]) throw Error(ErrorKind::not_divisible, "exponent ranges are incompatible");
  }
  const Term& lead_b = b.terms().front();

  std::map<Monomial, mpz_class, TermOrder> rem;
  for (const auto& t : a.terms()) rem.emplace(t.monomial, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!mpz_divisible_p(lead->second.get_mpz_t(), lead_b.coeff.get_mpz_t())) {
      throw Error(ErrorKind::not_divisible, "leading coefficient not divisible");
    }
    const Monomial qm = lead->first / lead_b.monomial;
    for (std::size_t s = 0; s < static_cast<std::size_t>(kMaxVariables); ++s) {
      const int e = qm[static_cast<int>(s)];
      if (e < qbox.lo[s] || e > qbox.hi[s]) throw Error(ErrorKind::not_divisible, "quotient leaves its support box");
    }
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), lead->second.get_mpz_t(), lead_b.coeff.get_mpz_t());
    for (const auto& tb : b.terms()) {
      const Monomial mono = qm * tb.monomial;
      auto [it, inserted] = rem.try_emplace(mono, 0);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), tb.coeff.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{qm, std::move(qc)});
  }
  return LaurentPoly::from_terms(a.m(), a.n(), std::move(quotient));
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.m() != b.m() || a.n() != b.n()) {
    throw Error(ErrorKind::context_mismatch, "exact_divide operands live in different contexts");
  }
  if (b.is_zero()) throw Error(ErrorKind::not_divisible, "division by zero");
  if (b.size() == 1) {
    const Term& t = b.terms().front();
    LaurentPoly out = a * LaurentPoly::monomial(RingContext(a.m(), a.n()), t.monomial.inverse());
    if (t.coeff == 1) return out;
    std::vector<Term> terms = out.terms();
    for (auto& term : terms) {
      if (!mpz_divisible_p(term.coeff.get_mpz_t(), t.coeff.get_mpz_t())) {
        throw Error(ErrorKind::not_divisible, "coefficient not divisible");
      }
      mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
    return LaurentPoly::from_terms(a.m(), a.n(), std::move(terms));
  }
  if (auto diff = as_variable_difference(b)) return divide_by_binomial(a, diff->first, diff->second);
  return long_divide(a, b);
}

// ---------------------------------------------------------------------------
// Homomorphisms and structure

LaurentPoly substitute(const LaurentPoly& f, Variable target, const LaurentPoly& g) {
  if (f.m() != g.m() || f.n() != g.n()) {
    throw Error(ErrorKind::context_mismatch, "substitute: image lives in a different context");
  }
  const RingContext ctx(f.m(), f.n());
  const int slot = slot_of(target, f.m());
  std::map<int, std::vector<Term>> by_exponent;
  for (const auto& t : f.terms()) {
    Term rest = t;
    const int e = rest.monomial[slot];
    rest.monomial[slot] = 0;
    by_exponent[e].push_back(std::move(rest));
  }
  LaurentPoly out(ctx);
  for (auto& [e, terms] : by_exponent) {
    if (e < 0 && !g.is_unit()) {
      throw Error(ErrorKind::non_invertible_substitution, "negative exponent mapped to a non-unit");
    }
    out += LaurentPoly::from_terms(f.m(), f.n(), std::move(terms)) * power(g, e);
  }
  return out;
}

LaurentPoly remap_variables(const LaurentPoly& f, const RingContext& target, std::span<const Variable> x_map,
                            std::span<const Variable> y_map) {
  if (static_cast<int>(x_map.size()) != f.m() || static_cast<int>(y_map.size()) != f.n()) {
    throw Error(ErrorKind::context_mismatch, "variable map does not match the source context");
  }
  std::vector<int> slot_map;
  slot_map.reserve(x_map.size() + y_map.size());
  for (auto var : x_map) slot_map.push_back(slot_of(var, target.m));
  for (auto var : y_map) slot_map.push_back(slot_of(var, target.m));
  for (std::size_t i = 0; i < slot_map.size(); ++i) {
    const Variable var = i < x_map.size() ? x_map[i] : y_map[i - x_map.size()];
    if (var.index < 0 || var.index >= target.sector_size(var.sector)) {
      throw Error(ErrorKind::context_mismatch, "variable map points outside the target context");
    }
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial mono;
    for (std::size_t s = 0; s < slot_map.size(); ++s) {
      const int slot = slot_map[s];
      mono[slot] = checked_exponent(mono[slot] + t.monomial[static_cast<int>(s)]);
    }
    terms.push_back(Term{mono, t.coeff});
  }
  return LaurentPoly::from_terms(target.m, target.n, std::move(terms));
}

LaurentPoly star(const LaurentPoly& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back(Term{t.monomial.inverse(), t.coeff});
  return LaurentPoly::from_terms(f.m(), f.n(), std::move(terms));
}

LaurentPoly euler_derivative(const LaurentPoly& f, Variable v) {
  const int slot = slot_of(v, f.m());
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const int e = t.monomial[slot];
    if (e != 0) terms.push_back(Term{t.monomial, t.coeff * e});
  }
  // Scaling coefficients keeps the existing order.
  return LaurentPoly::from_terms(f.m(), f.n(), std::move(terms));
}

LaurentPoly transpose_variables(const LaurentPoly& f, Variable a, Variable b) {
  if (a.sector != b.sector) throw Error(ErrorKind::context_mismatch, "transposition across sectors");
  const int sa = slot_of(a, f.m());
  const int sb = slot_of(b, f.m());
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) std::swap(t.monomial[sa], t.monomial[sb]);
  return LaurentPoly::from_terms(f.m(), f.n(), std::move(terms));
}

bool is_symmetric(const LaurentPoly& f) {
  for (Sector sector : {Sector::x, Sector::y}) {
    const int size = sector == Sector::x ? f.m() : f.n();
    for (int i = 0; i + 1 < size; ++i) {
      if (transpose_variables(f, {sector, i}, {sector, i + 1}) != f) return false;
    }
  }
  return true;
}

std::vector<LaurentPoly> homogeneous_components(const LaurentPoly& f) {
  std::vector<LaurentPoly> out;
  const auto& terms = f.terms();
  std::size_t begin = 0;
  while (begin < terms.size()) {
    const int d = terms[begin].monomial.degree();
    std::size_t end = begin;
    while (end < terms.size() && terms[end].monomial.degree() == d) ++end;
    out.push_back(LaurentPoly::from_terms(f.m(), f.n(), {terms.begin() + static_cast<std::ptrdiff_t>(begin),
                                                        terms.begin() + static_cast<std::ptrdiff_t>(end)}));
    begin = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void append_monomial(std::string& out, const Monomial& mono, int m, int n) {
  bool first = true;
  for (int s = 0; s < m + n; ++s) {
    const int e = mono[s];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += s < m ? 'x' : 'y';
    out += std::to_string(s < m ? s + 1 : s - m + 1);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
}

}  // namespace

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpz_class magnitude = abs(t.coeff);
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) {
      out += magnitude.get_str();
      out += '*';
    }
    append_monomial(out, t.monomial, f.m(), f.n());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingContext& ctx) : text_(text), ctx_(ctx) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty input");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
      skip_space();
    }
    terms.push_back(parse_term(sign));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_space();
      terms.push_back(parse_term(op == '-' ? -1 : 1));
    }
    return LaurentPoly::from_terms(ctx_.m, ctx_.n, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term term{Monomial{}, sign};
    bool any_factor = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= parse_unsigned();
      } else if (c == 'x' || c == 'y') {
        get();
        const Sector sector = c == 'x' ? Sector::x : Sector::y;
        const auto index = parse_unsigned();
        if (index < 1 || index > ctx_.sector_size(sector)) {
          fail("variable " + std::string(1, c) + index.get_str() + " outside the context");
        }
        int exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          get();
          skip_space();
          int exp_sign = 1;
          if (!at_end() && (peek() == '-' || peek() == '+')) exp_sign = get() == '-' ? -1 : 1;
          const auto e = parse_unsigned();
          if (!e.fits_sint_p()) fail("exponent too large");
          exponent = exp_sign * static_cast<int>(e.get_si());
        }
        const int slot = slot_of(Variable{sector, static_cast<int>(index.get_si()) - 1}, ctx_.m);
        const int total = term.monomial[slot] + exponent;
        if (total < std::numeric_limits<Monomial::Exponent>::min() ||
            total > std::numeric_limits<Monomial::Exponent>::max()) {
          fail("exponent out of range");
        }
        term.monomial[slot] = static_cast<Monomial::Exponent>(total);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any_factor = true;
      skip_space();
      if (at_end() || peek() != '*') break;
      get();
    }
    if (!any_factor) fail("empty term");
    return term;
  }

  mpz_class parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse_error, msg + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  RingContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const RingContext& ctx) { return PolyParser(text, ctx).parse(); }

}  // namespace superschur
