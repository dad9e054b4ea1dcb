#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace radmax {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
  /// Minimal command reproducing the first failure (empty on success).
  std::string reproducer;
};

struct VerifyOptions {
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 12345;
  std::size_t maximal_grid = 512;
  std::size_t inclusion_radii = 64;
};

/// Level-set inclusion configurations (R, r) shared by the inclusion suite.
struct InclusionConfig {
  double R;
  double r;
};
const std::vector<InclusionConfig>& inclusion_configs();

std::vector<std::string> verify_suite_names();

/// Runs "spheres", "gaussian-lemmas", "remark", "inclusion", "montecarlo" or "all".
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& options = {});

}  // namespace radmax
