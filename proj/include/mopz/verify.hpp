#pragma once

#include "mopz/relations.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mopz {

struct VerifyOptions {
  long trials = 100;
  std::uint64_t seed = 42;
  int n_max = 8;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string worst_metric;  // decimal string of the worst observed metric
  std::string worst_case;    // inputs of the worst / first failing case
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<PropertyResult> properties;
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts);

// Test hook: run the structure suite with caller-supplied coefficients so a
// deliberately broken pair is caught as a localized property failure.
using StructureCoeffsProvider = std::function<StructureCoeffs(int, const ParamSet&)>;
SuiteReport run_structure_suite(const VerifyOptions& opts,
                                const StructureCoeffsProvider& provider = {});

SuiteReport run_interlacing_suite(const VerifyOptions& opts);
SuiteReport run_raising_suite(const VerifyOptions& opts);
SuiteReport run_orthogonality_suite(const VerifyOptions& opts);
SuiteReport run_means_suite(const VerifyOptions& opts);
SuiteReport run_electro_suite(const VerifyOptions& opts);
SuiteReport run_limits_suite(const VerifyOptions& opts);

}  // namespace mopz
