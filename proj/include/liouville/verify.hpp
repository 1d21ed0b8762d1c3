#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace liouville {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

/// Randomized exact checks of the symbolic identities the library relies on.
/// Deterministic for a given (order, seed).
std::vector<CheckResult> run_identity_checks(std::size_t order, std::uint64_t seed,
                                             std::size_t cases = 20);

}  // namespace liouville
