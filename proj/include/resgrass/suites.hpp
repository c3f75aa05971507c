#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resgrass/parallel.hpp"
#include "resgrass/elements.hpp"

namespace resgrass {

struct SuiteResult {
  std::string name;
  SplitSpace space;
  int trials = 0;
  double max_error = 0;
  double tolerance = 0;
  bool pass() const { return max_error < tolerance; }
};

// Each suite draws its trials from per-trial seeded generators and reduces
// the per-trial identity error by max, so results are independent of the
// execution policy.
SuiteResult cocycle_suite(SplitSpace space, int trials, std::uint64_t seed,
                          Exec exec = default_exec());
SuiteResult jacobi_suite(SplitSpace space, int trials, std::uint64_t seed,
                         Exec exec = default_exec());
SuiteResult sigma_hom_suite(SplitSpace space, int trials, std::uint64_t seed,
                            Exec exec = default_exec());
SuiteResult equivariance_suite(SplitSpace space, int trials, std::uint64_t seed,
                               Exec exec = default_exec());
SuiteResult pullback_suite(SplitSpace space, int trials, std::uint64_t seed,
                           Exec exec = default_exec());

std::vector<SuiteResult> run_identity_suites(const std::vector<SplitSpace>& sizes, int trials,
                                             std::uint64_t seed, Exec exec = default_exec());

}  // namespace resgrass
