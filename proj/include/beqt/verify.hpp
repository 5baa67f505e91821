#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace beqt {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, double>> metrics;
  std::string message;
};

// Property suites behind `verify`. Names: trace-inequality, lemma1,
// partition, bernstein, commutator, interpolation, variational.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_suites(const std::string& selector, std::uint64_t seed);

}  // namespace beqt
