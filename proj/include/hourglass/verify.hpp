#pragma once

#include <string>
#include <vector>

#include "hourglass/plane_partition.hpp"

namespace hourglass {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_box = 3;          // macmahon/trips suites
  Box3 box{2, 2, 2};        // benzene suite
  int d = 3;                // projection suite
  int max_class_size = 3;   // counts suite (a, c, d bounds)
};

std::vector<std::string> verify_suite_names();
// Runs one of: macmahon, benzene, words, counts, projection, trips.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace hourglass
