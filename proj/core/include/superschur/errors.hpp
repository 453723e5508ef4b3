#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superschur {

enum class ErrorKind {
  invalid_context,
  context_mismatch,
  not_divisible,
  non_invertible_substitution,
  budget_exceeded,
  size_exceeded,
  invalid_index,
  convention_violated,
  sector_violation,
  not_in_ring,
  not_in_span,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (notably the CLI) can map it onto an exit code without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace superschur
