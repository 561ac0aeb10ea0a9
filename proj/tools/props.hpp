#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lorentzkit::cli {

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant corpus; `count` random profiles per family.
std::vector<InvariantResult> run_invariants(std::uint64_t seed, std::size_t count);

}  // namespace lorentzkit::cli
