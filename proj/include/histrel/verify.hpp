#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "histrel/instances.hpp"
#include "histrel/io.hpp"

namespace histrel {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  InstanceShape shape{2, 3, 1, 5, 1, 12};
  Count binary_sweep_length = 10;  // 0 disables the sweep
};

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  double worst_violation = 0.0;
  std::string first_failure;

  bool ok() const { return passed == total; }
  void record(bool ok, double violation = 0.0, const std::string& context = {});
};

struct VerificationReport {
  std::vector<PropertyResult> properties;

  bool all_passed() const;
  json to_json() const;
};

/// Runs the oracle-equivalence and invariant checks on `trials` seeded
/// random instances, the E3 instance, and the exhaustive two-member binary
/// sweep. Deterministic for a fixed seed.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace histrel
