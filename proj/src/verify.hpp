#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "processes.hpp"

namespace qcov {

struct SuiteResult {
  std::string name;
  bool pass = false;
  int trials = 0;
  double max_dev = 0.0;
  double tolerance = 0.0;
};

/// Known suites: covariance, linearity, marginals, spectrum, permutation,
/// generators, roundtrip. Throws ValidationError on an unknown name.
SuiteResult run_suite(const std::string& name, int n, int trials,
                      std::uint64_t seed);

std::vector<std::string> suite_names();

/// Bloch vector of a Haar-random pure state (m = N rho convention).
Matrix random_pure_bloch(int n, std::uint64_t seed);

}  // namespace qcov
