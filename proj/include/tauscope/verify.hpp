#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tauscope/localise.hpp"

namespace tauscope::verify {

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::vector<std::string> failures;
};

struct Report {
  std::vector<CheckResult> checks;
  std::size_t failureCount() const;
  bool ok() const { return failureCount() == 0; }
};

// Every invariant over every torsion class of the census.  The seed drives
// the sampled closure checks.
Report runInvariantSuite(const census::Census& c, std::uint64_t seed = 0x5eed);

}  // namespace tauscope::verify
