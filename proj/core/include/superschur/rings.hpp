#pragma once

// The rings as checkable structures: supersymmetry membership, basis index
// sets and their elements, expansion in a basis, and window-bounded checks of
// the presentations by generators and relations.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "superschur/dets.hpp"
#include "superschur/genfun.hpp"
#include "superschur/polyring.hpp"

namespace superschur {

/// Bounds every enumeration: indices lie in [-index_bound, index_bound]
/// (nonnegative parts in [0, index_bound]) and only elements with
/// |degree| <= degree_bound are kept.
struct Window {
  int index_bound = 4;
  int degree_bound = 6;

  friend bool operator==(const Window&, const Window&) = default;
};

enum class BasisKind {
  x_plus,      // H(I,J) = R_I(H) h_1^{j_1}...h_q^{j_q}
  x_pm,        // R_I(H) h_1^{j_1}...h_{q-1}^{j_{q-1}} Delta^{j_q}
  kac,         // K_{lambda,mu}, (I,J) = (lambda,mu); mu >= 0 unless y is Laurent
  admissible,  // H(I,J) with every entry of I above n - m (polynomial ring)
};

std::string_view to_string(BasisKind kind) noexcept;

/// Name of the ring selected by the context flags.
std::string ring_name(const RingContext& ctx);

/// Symmetric and x_i f_{x_i} + y_j f_{y_j} vanishes under x_i -> y_j for all
/// i, j. Throws sector_violation when f uses negative exponents the context
/// forbids, context_mismatch when the variable counts differ.
bool is_supersymmetric(const LaurentPoly& f, const RingContext& ctx);

/// Indices of `kind` inside the window, in a fixed deterministic order.
/// Throws invalid_context for kind::kac over a polynomial x-sector.
std::vector<BasisIndex> enumerate_basis(BasisKind kind, const RingContext& ctx, const Window& window);
/// Degree of basis_element(index, kind, ctx), read off the index.
int basis_degree(const BasisIndex& index, BasisKind kind, const RingContext& ctx);
/// Throws invalid_index when the index is outside the kind's index set.
LaurentPoly basis_element(const BasisIndex& index, BasisKind kind, const RingContext& ctx);
LaurentPoly basis_element(const BasisIndex& index, BasisKind kind, const GeneratorTable& table);

/// Enumerated basis of one window with its elements computed once.
class BasisCatalog {
 public:
  BasisCatalog(BasisKind kind, const RingContext& ctx, const Window& window);

  BasisKind kind() const noexcept { return kind_; }
  const RingContext& context() const noexcept { return ctx_; }
  const Window& window() const noexcept { return window_; }
  std::size_t size() const noexcept { return indices_.size(); }
  const std::vector<BasisIndex>& indices() const noexcept { return indices_; }
  const std::vector<LaurentPoly>& elements() const noexcept { return elements_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  /// Positions of the elements of one degree.
  std::vector<std::size_t> slice(int degree) const;
  /// Distinct degrees present, ascending.
  std::vector<int> degree_list() const;

 private:
  BasisKind kind_;
  RingContext ctx_;
  Window window_;
  std::vector<BasisIndex> indices_;
  std::vector<LaurentPoly> elements_;
  std::vector<int> degrees_;
  std::map<int, std::vector<std::size_t>> by_degree_;
};

/// Rank over Q of a family of polynomials.
std::size_t rank_of(const std::vector<LaurentPoly>& family);

/// Coefficients c over catalog.indices() with sum c_i b_i = f; f is split
/// into homogeneous components first. Throws not_in_span when a component is
/// outside the span of the window's elements of its degree.
std::vector<mpq_class> expand_in_basis(const LaurentPoly& f, const BasisCatalog& catalog);
std::vector<mpq_class> expand_in_basis(const LaurentPoly& f, BasisKind kind, const RingContext& ctx,
                                       const Window& window);

/// Outcome of a window-bounded verification.
struct Report {
  std::string ring;
  std::string kind;
  Window window;
  long instances_checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  void merge(const Report& other);
};

/// det(H_{lambda_i - i + j}) of size m + 1 vanishes for every non-increasing
/// lambda in [-W, W]^{m+1}.
Report verify_vanishing_relations(const RingContext& ctx, const Window& window);

enum class PresentationKind { u_plus, u_pm, u };
std::string_view to_string(PresentationKind kind) noexcept;

/// Relations of the presentation vanish under the map to the concrete ring,
/// the designated linear generators map to an independent family in every
/// degree slice, plus the kind-specific extras: the inverse of t for u_pm,
/// spanning by admissible elements for u.
Report verify_presentation(const RingContext& ctx, PresentationKind kind, const Window& window);

/// For n >= m: the map H_i -> H_{n-m+i} on the m x m partially polynomial
/// ring tensored with h_i -> h_i (i <= n - m) sends window basis elements to
/// distinct, independent basis elements of the m x n ring; also checks the
/// degree shift and the degree-preserving composition.
Report check_tensor_iso(int m, int n, const Window& window);

}  // namespace superschur
