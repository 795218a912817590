#ifndef MATASYM_VERIFY_HPP
#define MATASYM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace matasym {

// One invariant check: `passed` already encodes the comparison direction,
// measured/tolerance are reported for the log line.
struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

// Invariant suites per module; deterministic for a fixed seed. The oracle
// module's own invariants (consistency, family certificates, determinism)
// run inside the matcore suite.
std::vector<CheckResult> verify_matcore(std::uint64_t seed);
std::vector<CheckResult> verify_expansions(std::uint64_t seed);
std::vector<CheckResult> verify_specfun(std::uint64_t seed);
std::vector<CheckResult> verify_all(std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace matasym

#endif  // MATASYM_VERIFY_HPP
