#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eisen {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::string suite = "all";
  std::int64_t table_c_max = 120;
};

const std::vector<std::string>& suite_names();

// Runs the named suite (or every suite for "all"). Throws DomainError for an
// unknown suite name.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace eisen
