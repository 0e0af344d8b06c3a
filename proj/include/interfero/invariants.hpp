#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace interfero {

struct InvariantResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first failing case, empty when none failed.
  std::string first_failure;
};

/// Randomized self-check of the algebraic laws the library relies on.
/// `cases` draws per randomized property; deterministic for a given seed.
std::vector<InvariantResult> run_invariant_suite(std::uint64_t seed, std::size_t cases);

}  // namespace interfero
