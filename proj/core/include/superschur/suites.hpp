#pragma once

// Named verification suites, each a sweep of one family of identities over a
// bounded window. The CLI's `verify` subcommand and the acceptance tests run
// these.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superschur/rings.hpp"

namespace superschur {

struct SuiteOptions {
  /// Single context to check; when unset each suite sweeps its own list.
  std::optional<int> m;
  std::optional<int> n;
  Window window{};
  int trials = 50;
  std::uint64_t seed = 1;
  /// Presentation kind for `presentation` ("Uplus", "U", "Upm"); empty = all.
  std::string kind;
};

std::vector<std::string> suite_names();

/// Throws invalid_index for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace superschur
