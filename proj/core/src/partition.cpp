#include "superschur/partition.hpp"

#include <algorithm>
#include <numeric>

#include "superschur/errors.hpp"

namespace superschur {

bool is_non_increasing(const IntSeq& seq) noexcept {
  return std::adjacent_find(seq.begin(), seq.end(), std::less<>{}) == seq.end();
}

bool is_strictly_decreasing(const IntSeq& seq) noexcept {
  return std::adjacent_find(seq.begin(), seq.end(), std::less_equal<>{}) == seq.end();
}

int sum_of(const IntSeq& seq) noexcept { return std::accumulate(seq.begin(), seq.end(), 0); }

std::string to_string(const IntSeq& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out + ")";
}

Partition::Partition(IntSeq parts) : parts_(std::move(parts)) {
  if (!is_non_increasing(parts_) || (!parts_.empty() && parts_.back() < 0)) {
    throw Error(ErrorKind::invalid_index, "not a partition: " + to_string(parts_));
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const noexcept {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
  IntSeq out;
  const int width = empty() ? 0 : parts_.front();
  for (int j = 1; j <= width; ++j) {
    out.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  }
  return Partition(std::move(out));
}

namespace {

void extend(int remaining, int cap, IntSeq& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    current.push_back(part);
    extend(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  IntSeq current;
  extend(weight, weight, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

namespace {

// Fills positions left to right; `step` is the gap forced between
// neighbours (0 for non-increasing, 1 for strictly decreasing, -1 for none).
void fill(int length, int lo, int hi, int step, IntSeq& current, std::vector<IntSeq>& out) {
  if (static_cast<int>(current.size()) == length) {
    out.push_back(current);
    return;
  }
  const int top = (current.empty() || step < 0) ? hi : current.back() - step;
  for (int v = top; v >= lo; --v) {
    current.push_back(v);
    fill(length, lo, hi, step, current, out);
    current.pop_back();
  }
}

std::vector<IntSeq> sequences(int length, int lo, int hi, int step) {
  std::vector<IntSeq> out;
  if (length < 0) return out;
  IntSeq current;
  current.reserve(static_cast<std::size_t>(length));
  fill(length, lo, hi, step, current, out);
  return out;
}

}  // namespace

std::vector<IntSeq> non_increasing_sequences(int length, int lo, int hi) { return sequences(length, lo, hi, 0); }

std::vector<IntSeq> strictly_decreasing_sequences(int length, int lo, int hi) {
  return sequences(length, lo, hi, 1);
}

std::vector<IntSeq> integer_box(int length, int lo, int hi) { return sequences(length, lo, hi, -1); }

SignedSplit split_signed(const IntSeq& seq) {
  if (!is_non_increasing(seq)) {
    throw Error(ErrorKind::invalid_index, "sequence must be non-increasing: " + to_string(seq));
  }
  IntSeq positive;
  IntSeq negative;
  int zeros = 0;
  for (int v : seq) {
    if (v > 0) {
      positive.push_back(v);
    } else if (v == 0) {
      ++zeros;
    }
  }
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it < 0) negative.push_back(-*it);
  }
  return SignedSplit{Partition(std::move(positive)), Partition(std::move(negative)), zeros};
}

}  // namespace superschur
