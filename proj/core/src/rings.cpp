#include "superschur/rings.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "linalg.hpp"
#include "superschur/errors.hpp"

namespace superschur {

std::string_view to_string(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::x_plus: return "Xplus";
    case BasisKind::x_pm: return "Xpm";
    case BasisKind::kac: return "X";
    case BasisKind::admissible: return "admissible";
  }
  return "?";
}

std::string_view to_string(PresentationKind kind) noexcept {
  switch (kind) {
    case PresentationKind::u_plus: return "Uplus";
    case PresentationKind::u_pm: return "Upm";
    case PresentationKind::u: return "U";
  }
  return "?";
}

std::string ring_name(const RingContext& ctx) {
  const std::string dims = "_{" + std::to_string(ctx.m) + "," + std::to_string(ctx.n) + "}";
  if (ctx.x_laurent && ctx.y_laurent) return "Lambda^pm" + dims;
  if (ctx.x_laurent) return "Lambda^{+y}" + dims;
  if (!ctx.y_laurent) return "Lambda" + dims;
  return "Lambda^{+x}" + dims;
}

void Report::merge(const Report& other) {
  instances_checked += other.instances_checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

LaurentPoly signed_delta(const RingContext& ctx) {
  LaurentPoly d = delta_ratio(ctx);
  if ((ctx.n - ctx.m) % 2 != 0) d = -d;
  return d;
}

SeqProvider big_H_view(const GeneratorTable& table) {
  return SeqProvider(table.context(), [&table](int k) { return table.H(k); }, "H");
}

GeneratorTable table_for(const RingContext& ctx, const Window& window) {
  const int reach = window.index_bound + ctx.m + ctx.n + 2;
  return GeneratorTable(ctx, -reach, reach);
}

std::string index_text(const BasisIndex& index) { return to_string(index.I) + ";" + to_string(index.J); }

}  // namespace

// ---------------------------------------------------------------------------
// supersymmetry

bool is_supersymmetric(const LaurentPoly& f, const RingContext& ctx) {
  if (f.m() != ctx.m || f.n() != ctx.n) throw Error(ErrorKind::context_mismatch, "is_supersymmetric: context mismatch");
  for (const auto& t : f.terms()) {
    for (int i = 0; i < ctx.m; ++i) {
      if (!ctx.x_laurent && t.monomial[i] < 0) {
        throw Error(ErrorKind::sector_violation, "negative x-exponent in " + ring_name(ctx));
      }
    }
    for (int j = 0; j < ctx.n; ++j) {
      if (!ctx.y_laurent && t.monomial[ctx.m + j] < 0) {
        throw Error(ErrorKind::sector_violation, "negative y-exponent in " + ring_name(ctx));
      }
    }
  }
  if (!is_symmetric(f)) return false;
  for (int i = 0; i < ctx.m; ++i) {
    const LaurentPoly fx = euler_derivative(f, Variable::x(i));
    for (int j = 0; j < ctx.n; ++j) {
      const LaurentPoly g = fx + euler_derivative(f, Variable::y(j));
      if (!substitute(g, Variable::x(i), LaurentPoly::variable(ctx, Variable::y(j))).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// bases

int basis_degree(const BasisIndex& index, BasisKind kind, const RingContext& ctx) {
  if (kind == BasisKind::kac) return sum_of(index.I) + sum_of(index.J);
  const int p = static_cast<int>(index.I.size());
  const int q = static_cast<int>(index.J.size());
  int degree = sum_of(index.I) + p * (p - 1) / 2;
  for (int r = 1; r <= q; ++r) {
    const int j = index.J[at(r - 1)];
    degree += (kind == BasisKind::x_pm && r == q) ? (ctx.n - ctx.m) * j : r * j;
  }
  return degree;
}

std::vector<BasisIndex> enumerate_basis(BasisKind kind, const RingContext& ctx, const Window& window) {
  const int w = window.index_bound;
  if (kind == BasisKind::kac && !ctx.x_laurent) {
    throw Error(ErrorKind::invalid_context, "Kac elements are not polynomial in x; use the admissible basis");
  }
  std::vector<BasisIndex> out;
  for (int p = std::max(0, ctx.m - ctx.n); p <= ctx.m; ++p) {
    const int q = p - ctx.m + ctx.n;
    if (q < 0 || q > ctx.n) continue;
    std::vector<IntSeq> firsts;
    std::vector<IntSeq> seconds;
    switch (kind) {
      case BasisKind::x_plus:
        firsts = strictly_decreasing_sequences(p, -w, w);
        seconds = integer_box(q, 0, w);
        break;
      case BasisKind::admissible:
        firsts = strictly_decreasing_sequences(p, std::max(-w, ctx.n - ctx.m + 1), w);
        seconds = integer_box(q, 0, w);
        break;
      case BasisKind::x_pm:
        firsts = strictly_decreasing_sequences(p, -w, w);
        if (q == 0) {
          seconds = {IntSeq{}};
        } else {
          for (auto head : integer_box(q - 1, 0, w)) {
            for (int last = w; last >= -w; --last) {
              head.push_back(last);
              seconds.push_back(head);
              head.pop_back();
            }
          }
        }
        break;
      case BasisKind::kac:
        firsts = non_increasing_sequences(p, -w, w);
        seconds = non_increasing_sequences(q, ctx.y_laurent ? -w : 0, w);
        break;
    }
    for (const auto& first : firsts) {
      for (const auto& second : seconds) {
        BasisIndex index{first, second};
        if (std::abs(basis_degree(index, kind, ctx)) <= window.degree_bound) out.push_back(std::move(index));
      }
    }
  }
  return out;
}

LaurentPoly basis_element(const BasisIndex& index, BasisKind kind, const RingContext& ctx) {
  const Window reach{std::max({0, std::abs(sum_of(index.I)), static_cast<int>(index.I.size())}), 0};
  return basis_element(index, kind, table_for(ctx, reach));
}

LaurentPoly basis_element(const BasisIndex& index, BasisKind kind, const GeneratorTable& table) {
  const RingContext& ctx = table.context();
  if (kind == BasisKind::kac) return kac_K(index.I, index.J, table);

  const bool valid = kind == BasisKind::x_pm ? in_x_pm(index, ctx.m, ctx.n) : in_x_plus(index, ctx.m, ctx.n);
  const bool admissible =
      kind != BasisKind::admissible ||
      std::all_of(index.I.begin(), index.I.end(), [&](int i) { return i > ctx.n - ctx.m; });
  if (!valid || !admissible) {
    throw Error(ErrorKind::invalid_index, "(" + index_text(index) + ") is not a " + std::string(to_string(kind)) +
                                              " index for m=" + std::to_string(ctx.m) + " n=" + std::to_string(ctx.n));
  }
  LaurentPoly out = r_det(index.I, big_H_view(table));
  const int q = static_cast<int>(index.J.size());
  for (int r = 1; r <= q; ++r) {
    const int j = index.J[at(r - 1)];
    if (j == 0) continue;
    if (kind == BasisKind::x_pm && r == q) {
      out *= power(delta_ratio(ctx), j);
    } else {
      out *= power(table.h(r), j);
    }
  }
  return out;
}

BasisCatalog::BasisCatalog(BasisKind kind, const RingContext& ctx, const Window& window)
    : kind_(kind), ctx_(ctx), window_(window), indices_(enumerate_basis(kind, ctx, window)) {
  const GeneratorTable table = table_for(ctx, window);
  elements_.reserve(indices_.size());
  degrees_.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    elements_.push_back(basis_element(indices_[i], kind, table));
    degrees_.push_back(basis_degree(indices_[i], kind, ctx));
    by_degree_[degrees_.back()].push_back(i);
  }
}

std::vector<std::size_t> BasisCatalog::slice(int degree) const {
  const auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? std::vector<std::size_t>{} : it->second;
}

std::vector<int> BasisCatalog::degree_list() const {
  std::vector<int> out;
  for (const auto& [d, members] : by_degree_) out.push_back(d);
  return out;
}

std::size_t rank_of(const std::vector<LaurentPoly>& family) {
  std::vector<const LaurentPoly*> ptrs;
  ptrs.reserve(family.size());
  for (const auto& f : family) ptrs.push_back(&f);
  return linalg::rank(linalg::coordinates(ptrs));
}

std::vector<mpq_class> expand_in_basis(const LaurentPoly& f, const BasisCatalog& catalog) {
  const RingContext& ctx = catalog.context();
  if (!is_supersymmetric(f, ctx)) {
    throw Error(ErrorKind::not_in_ring, "input is not supersymmetric in " + ring_name(ctx));
  }
  std::vector<mpq_class> out(catalog.size());
  for (const auto& component : homogeneous_components(f)) {
    const int degree = *component.homogeneous_degree();
    const auto members = catalog.slice(degree);
    std::vector<const LaurentPoly*> family;
    family.reserve(members.size());
    for (std::size_t i : members) family.push_back(&catalog.elements()[i]);
    const auto coeffs = linalg::solve(family, component);
    if (!coeffs) {
      throw Error(ErrorKind::not_in_span, "degree " + std::to_string(degree) + " component is outside the span of the " +
                                              std::to_string(members.size()) + " window elements of that degree");
    }
    for (std::size_t i = 0; i < members.size(); ++i) out[members[i]] = (*coeffs)[i];
  }
  return out;
}

std::vector<mpq_class> expand_in_basis(const LaurentPoly& f, BasisKind kind, const RingContext& ctx,
                                       const Window& window) {
  return expand_in_basis(f, BasisCatalog(kind, ctx, window));
}

// ---------------------------------------------------------------------------
// relations and presentations

namespace {

// Jacobi-Trudi form det(w_{lambda_i - i + j}) when `jacobi_trudi_form`,
// otherwise R_I(w) = det(w_{i_a + b - 1}).
Report vanishing_report(const RingContext& ctx, const Window& window, const SeqProvider& w, int lo, int hi,
                        const std::string& kind, bool jacobi_trudi_form) {
  Report report{ring_name(ctx), kind, window, 0, {}};
  for (const auto& lambda : non_increasing_sequences(ctx.m + 1, lo, hi)) {
    ++report.instances_checked;
    const LaurentPoly value = jacobi_trudi_form ? jacobi_trudi(lambda, ctx.m + 1, w) : r_det(lambda, w);
    if (!value.is_zero()) {
      report.fail(ring_name(ctx) + " " + kind + ": relation " + to_string(lambda) + " does not vanish");
    }
  }
  return report;
}

// Checks every degree slice of a family for full rank.
void independence(Report& report, const std::vector<LaurentPoly>& family, const std::vector<int>& degrees,
                  const std::string& label) {
  std::map<int, std::vector<LaurentPoly>> slices;
  for (std::size_t i = 0; i < family.size(); ++i) slices[degrees[i]].push_back(family[i]);
  for (const auto& [degree, members] : slices) {
    ++report.instances_checked;
    const std::size_t r = rank_of(members);
    if (r != members.size()) {
      report.fail(label + ": degree " + std::to_string(degree) + " has rank " + std::to_string(r) + " for " +
                  std::to_string(members.size()) + " elements");
    }
  }
}

// Polynomials in a formal t with LaurentPoly coefficients, enough to run the
// generic determinant.
struct TPoly {
  RingContext ctx;
  std::vector<LaurentPoly> c;

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const LaurentPoly& v) { return v.is_zero(); });
  }
  TPoly& operator+=(const TPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), LaurentPoly(ctx));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), LaurentPoly(ctx));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out{a.ctx, {}};
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, LaurentPoly(a.ctx));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
  }
  LaurentPoly coeff(std::size_t k) const { return k < c.size() ? c[k] : LaurentPoly(ctx); }
};

// The unit check: R_{0,-1,...,-m}(w) as a polynomial in t has constant term
// 1, so t times -(a_1 + a_2 t + ...) is 1.
void check_t_invertible(Report& report, const RingContext& ctx, const GeneratorTable& table) {
  const int delta = ctx.n - ctx.m;
  auto u = [&](int i) { return i < 0 ? LaurentPoly(ctx) : (i == 0 ? LaurentPoly::one(ctx) : table.h(i)); };
  auto v = [&](int i) { return i < 0 ? LaurentPoly(ctx) : (i == 0 ? LaurentPoly::one(ctx) : table.hstar(i)); };
  const int size = ctx.m + 1;
  Matrix<TPoly> matrix(at(size));
  for (int a = 1; a <= size; ++a) {
    for (int b = 1; b <= size; ++b) {
      const int i = b - a;  // w_{i_a + b - 1} with i_a = 1 - a
      matrix[at(a - 1)].push_back(TPoly{ctx, {u(i), -v(delta - i)}});
    }
  }
  const TPoly zero{ctx, {}};
  const TPoly one{ctx, {LaurentPoly::one(ctx)}};
  const TPoly relation = laplace_determinant(matrix, zero, one);
  ++report.instances_checked;
  if (!relation.coeff(0).is_one()) {
    report.fail("constant term of R_{0,-1,...,-m}(w) in t is " + to_string(relation.coeff(0)) + ", expected 1");
    return;
  }
  const LaurentPoly t = signed_delta(ctx);
  LaurentPoly value(ctx);
  LaurentPoly inverse(ctx);
  LaurentPoly t_power = LaurentPoly::one(ctx);
  for (std::size_t k = 0; k < relation.c.size(); ++k) {
    value += relation.c[k] * t_power;
    if (k >= 1) inverse -= relation.c[k] * power(t, static_cast<int>(k) - 1);
    t_power *= t;
  }
  ++report.instances_checked;
  if (!value.is_zero()) report.fail("R_{0,-1,...,-m}(w) does not vanish at the image of t");
  ++report.instances_checked;
  if (!(t * inverse).is_one()) report.fail("t times the exhibited inverse is not 1");
  ++report.instances_checked;
  LaurentPoly expected = power(delta_ratio(ctx), -1);
  if (delta % 2 != 0) expected = -expected;
  if (inverse != expected) {
    report.fail("exhibited inverse " + to_string(inverse) + " differs from " + to_string(expected));
  }
}

}  // namespace

Report verify_vanishing_relations(const RingContext& ctx, const Window& window) {
  const GeneratorTable table = table_for(ctx, window);
  return vanishing_report(ctx, window, big_H_view(table), -window.index_bound, window.index_bound, "vanishing", true);
}

Report verify_presentation(const RingContext& base, PresentationKind kind, const Window& window) {
  RingContext ctx = base;
  ctx.x_laurent = kind != PresentationKind::u;
  ctx.y_laurent = kind == PresentationKind::u_pm;
  const int delta = ctx.n - ctx.m;
  const int reach = std::max(window.index_bound, window.degree_bound) + ctx.m + ctx.n + 2;
  const GeneratorTable table(ctx, -reach, reach);
  const std::string kind_name(to_string(kind));
  Report report{ring_name(ctx), std::string(kind_name), window, 0, {}};

  // Images of the generators.
  auto u = [&](int i) { return i < 0 ? LaurentPoly(ctx) : (i == 0 ? LaurentPoly::one(ctx) : table.h(i)); };
  const LaurentPoly t = signed_delta(ctx);
  SeqProvider w(ctx, [](int) { return LaurentPoly(); });
  switch (kind) {
    case PresentationKind::u_plus:
      // v_i -> (-1)^{n-m} Delta h*_i, i >= 0
      w = SeqProvider(ctx, [&, t](int i) {
        const int j = delta - i;
        return j < 0 ? u(i) : u(i) - t * table.hstar(j);
      }, "w");
      break;
    case PresentationKind::u_pm:
      // v_i -> h*_i with v_0 = 1, t -> (-1)^{n-m} Delta
      w = SeqProvider(ctx, [&, t](int i) {
        const int j = delta - i;
        if (j < 0) return u(i);
        return u(i) - t * (j == 0 ? LaurentPoly::one(ctx) : table.hstar(j));
      }, "w");
      break;
    case PresentationKind::u:
      w = SeqProvider(ctx, u, "u");
      break;
  }

  // The image of w_i is H_i wherever the relations can reach it.
  if (kind != PresentationKind::u) {
    for (int i = -window.index_bound; i <= window.index_bound + ctx.m; ++i) {
      ++report.instances_checked;
      if (w(i) != table.H(i)) report.fail("image of w_" + std::to_string(i) + " is not H_" + std::to_string(i));
    }
  }

  // (a) relations
  if (kind == PresentationKind::u) {
    const int lo = std::max(-window.index_bound, delta + 1);
    const int hi = std::max(window.index_bound, delta + window.index_bound);
    report.merge(vanishing_report(ctx, window, w, lo, hi, kind_name, false));
  } else {
    report.merge(vanishing_report(ctx, window, w, -window.index_bound, window.index_bound, kind_name, false));
  }

  // (b) independence of the images of R(I,J) = R_I(w) u_1^{j_1} ... (t^{j_q})
  const BasisKind basis = kind == PresentationKind::u_pm  ? BasisKind::x_pm
                          : kind == PresentationKind::u   ? BasisKind::admissible
                                                          : BasisKind::x_plus;
  std::vector<LaurentPoly> images;
  std::vector<int> degrees;
  for (const auto& index : enumerate_basis(basis, ctx, window)) {
    LaurentPoly image = r_det(index.I, w);
    const int q = static_cast<int>(index.J.size());
    for (int r = 1; r <= q; ++r) {
      const int j = index.J[at(r - 1)];
      if (j == 0) continue;
      image *= (basis == BasisKind::x_pm && r == q) ? power(t, j) : power(u(r), j);
    }
    const auto d = image.homogeneous_degree();
    ++report.instances_checked;
    if (!d || *d != basis_degree(index, basis, ctx)) {
      report.fail("image of R(" + index_text(index) + ") is zero or not of the expected degree");
      continue;
    }
    images.push_back(std::move(image));
    degrees.push_back(*d);
  }
  independence(report, images, degrees, "generators R(I,J)");

  // (c) extras
  if (kind == PresentationKind::u_pm) check_t_invertible(report, ctx, table);
  if (kind == PresentationKind::u_plus && ctx.n == 0) {
    IntSeq staircase;
    for (int a = 0; a < ctx.m; ++a) staircase.push_back(-a);
    ++report.instances_checked;
    if (!r_det(staircase, w).is_one()) report.fail("R_{0,-1,...,1-m}(w) is not 1");
  }
  if (kind == PresentationKind::u) {
    // Spanning: every h-monomial of degree <= D lies in the admissible span.
    const Window generous{window.degree_bound + ctx.m + ctx.n + 1, window.degree_bound};
    const BasisCatalog catalog(BasisKind::admissible, ctx, generous);
    for (int d = 1; d <= window.degree_bound; ++d) {
      for (const auto& lambda : partitions_of(d)) {
        LaurentPoly monomial = LaurentPoly::one(ctx);
        for (int part : lambda.parts()) monomial *= table.h(part);
        ++report.instances_checked;
        try {
          expand_in_basis(monomial, catalog);
        } catch (const Error& e) {
          report.fail("h-monomial " + to_string(lambda.parts()) + ": " + e.what());
        }
      }
    }
  }
  return report;
}

Report check_tensor_iso(int m, int n, const Window& window) {
  if (n < m) throw Error(ErrorKind::invalid_context, "check_tensor_iso needs n >= m");
  const int delta = n - m;
  const RingContext source = RingContext::partially_polynomial(m, m);
  const RingContext target = RingContext::partially_polynomial(m, n);
  const GeneratorTable source_table = table_for(source, window);
  const int reach = window.index_bound + delta + m + n + 2;
  const GeneratorTable table(target, -reach, reach);
  Report report{ring_name(target), "tensor", window, 0, {}};

  std::set<std::pair<IntSeq, IntSeq>> seen;
  std::vector<LaurentPoly> images;
  std::vector<int> image_degrees;
  std::vector<LaurentPoly> composed;
  std::vector<int> source_degrees;
  bool shifted = false;

  const Window wide{window.index_bound, window.degree_bound + window.index_bound * delta};
  for (const auto& index : enumerate_basis(BasisKind::x_plus, source, wide)) {
    for (const auto& k : integer_box(delta, 0, window.index_bound)) {
      int k_degree = 0;
      for (int r = 1; r <= delta; ++r) k_degree += r * k[at(r - 1)];
      const int source_degree = basis_degree(index, BasisKind::x_plus, source) + k_degree;
      if (std::abs(source_degree) > window.degree_bound) continue;

      BasisIndex image_index{index.I, k};
      for (int& i : image_index.I) i += delta;
      image_index.J.insert(image_index.J.end(), index.J.begin(), index.J.end());
      const std::string label = "(" + index_text(index) + ")x" + to_string(k);

      ++report.instances_checked;
      if (!in_x_plus(image_index, m, n)) {
        report.fail(label + ": image index " + index_text(image_index) + " is not in X+(m,n)");
        continue;
      }
      if (!seen.emplace(image_index.I, image_index.J).second) {
        report.fail(label + ": image index " + index_text(image_index) + " repeats");
        continue;
      }

      // The homomorphism applied generator by generator.
      LaurentPoly image = r_det(image_index.I, big_H_view(table));
      LaurentPoly composite = r_det(index.I, big_H_view(table));
      LaurentPoly tail = LaurentPoly::one(target);
      for (int r = 1; r <= delta; ++r) tail *= power(table.h(r), k[at(r - 1)]);
      for (int r = 1; r <= static_cast<int>(index.J.size()); ++r) {
        const int j = index.J[at(r - 1)];
        image *= power(table.H(delta + r), j);
        composite *= power(table.H(r), j);
      }
      image *= tail;
      composite *= tail;

      if (image != basis_element(image_index, BasisKind::x_plus, table)) {
        report.fail(label + ": image differs from the basis element " + index_text(image_index));
      }
      const int shift = delta * (static_cast<int>(index.I.size()) + sum_of(index.J));
      const int image_degree = basis_degree(image_index, BasisKind::x_plus, target);
      if (image_degree != source_degree + shift) report.fail(label + ": degree shift bookkeeping is off");
      if (shift != 0) shifted = true;
      const auto actual = image.homogeneous_degree();
      if (!actual || *actual != image_degree) report.fail(label + ": image is zero or has the wrong degree");
      const auto composed_degree = composite.homogeneous_degree();
      if (!composed_degree || *composed_degree != source_degree) {
        report.fail(label + ": shifted composition does not preserve the degree");
      }
      images.push_back(std::move(image));
      image_degrees.push_back(image_degree);
      composed.push_back(std::move(composite));
      source_degrees.push_back(source_degree);
    }
  }
  // Relations of the source go to relations of the target: R_{I+delta}(H) = 0.
  for (const auto& lambda : non_increasing_sequences(m + 1, -window.index_bound, window.index_bound)) {
    IntSeq shifted_index = lambda;
    for (int& i : shifted_index) i += delta;
    ++report.instances_checked;
    if (!jacobi_trudi(shifted_index, m + 1, big_H_view(table)).is_zero()) {
      report.fail("relation " + to_string(lambda) + " is not preserved");
    }
  }
  for (int i = 1; i <= window.index_bound; ++i) {
    ++report.instances_checked;
    if (table.H(delta + i) != table.h(delta + i)) report.fail("H_{n-m+i} != h_{n-m+i} at i=" + std::to_string(i));
  }
  ++report.instances_checked;
  if (delta > 0 && m > 0 && !shifted) report.fail("expected the unshifted map to move some degree");

  independence(report, images, image_degrees, "image family");
  independence(report, composed, source_degrees, "degree-preserving composition");
  (void)source_table;
  return report;
}

}  // namespace superschur
