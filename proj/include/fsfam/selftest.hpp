#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsfam {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every invariant of the arithmetic, group and character layers for one
/// prime, including both indicator paths and both induction formulas.
/// Random samples are drawn from a generator seeded with `seed`.
std::vector<CheckResult> run_selftest(std::uint32_t p, std::uint64_t seed = 20240229);

}  // namespace fsfam
