#pragma once

#include <string>
#include <vector>

namespace superschur {

/// Finite integer sequence; operations that need it non-increasing check it.
using IntSeq = std::vector<int>;

bool is_non_increasing(const IntSeq& seq) noexcept;
bool is_strictly_decreasing(const IntSeq& seq) noexcept;
int sum_of(const IntSeq& seq) noexcept;
std::string to_string(const IntSeq& seq);

/// Non-increasing sequence of positive parts (trailing zeros are dropped).
class Partition {
 public:
  Partition() = default;
  /// Throws ErrorKind::invalid_index unless `parts` is non-increasing and
  /// nonnegative.
  explicit Partition(IntSeq parts);

  const IntSeq& parts() const noexcept { return parts_; }
  /// l(lambda), the number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// |lambda|.
  int weight() const noexcept { return sum_of(parts_); }
  /// lambda_i for i >= 1, zero past the end.
  int part(int i) const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  IntSeq parts_;
};

/// All partitions of `weight`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight);
/// All partitions with weight <= max_weight.
std::vector<Partition> partitions_up_to(int max_weight);

/// Sequences of the given length with entries in [lo, hi], in decreasing
/// lexicographic order.
std::vector<IntSeq> non_increasing_sequences(int length, int lo, int hi);
std::vector<IntSeq> strictly_decreasing_sequences(int length, int lo, int hi);
std::vector<IntSeq> integer_box(int length, int lo, int hi);

/// A non-increasing integer sequence written as
/// (tau_1, ..., tau_r, 0, ..., 0, -nu_s, ..., -nu_1).
struct SignedSplit {
  Partition positive;  // tau
  Partition negative;  // nu
  int zeros = 0;
};

/// Throws ErrorKind::invalid_index when `seq` is not non-increasing.
SignedSplit split_signed(const IntSeq& seq);

}  // namespace superschur
