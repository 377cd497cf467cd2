#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ellspin {

struct SuiteOptions {
  int maxRank = 9;
  std::uint64_t seed = 1;
  std::size_t e8Samples = 100'000;
  int relationSamples = 500;
  int oracleSamples = 200;
  int threads = 0;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::string summary;  // one line
  std::vector<std::string> mismatches;
  nlohmann::ordered_json details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      mismatches.push_back(what);
    }
  }
};

/// final-chart e8 center coxeter type-b type-c worked braid oracles properties
const std::vector<std::string>& suiteNames();
/// ConfigurationError for an unknown name.
SuiteResult runSuite(const std::string& name, const SuiteOptions& opts);
nlohmann::ordered_json toJson(const SuiteResult& r);

/// Expected central involutions of the universal group, as "h1h3" strings, from the
/// table of central elements (empty when the center has odd order).
std::vector<std::string> tabulatedCenter(const std::string& type);

}  // namespace ellspin
