#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracklab/json_io.hpp"

namespace tracklab {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  json to_json() const;
};

struct VerifyOptions {
  std::int64_t max_weight = 24;  // enumeration bound
  std::uint64_t seed = 0;
  int cases = 500;
  int threads = 1;
};

SuiteReport verify_classification(const VerifyOptions& o);
SuiteReport verify_spattern(const VerifyOptions& o);
SuiteReport verify_sweep(const VerifyOptions& o);

}  // namespace tracklab
