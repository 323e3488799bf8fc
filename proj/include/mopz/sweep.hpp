#pragma once

#include "mopz/io.hpp"
#include "mopz/relations.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mopz {

struct SweepOptions {
  Wrt wrt = Wrt::Gamma;
  Real lo, hi, step;                          // grid lo, lo+step, ..., <= hi
  Family family = Family::AngelescoJacobi;    // aj, jl or lh
  int n = 3;
  ParamSet base;                              // jl/lh sweeps use the matching subset
};

struct SweepRecord {
  Real value;  // swept parameter value
  bool ok = false;
  std::string error;
  ZeroSet zeros;
  std::vector<Real> sensitivities;  // central differences, matched indices
  std::string sign_pattern;         // one of -/0/+ per zero
  bool gamma_split_pattern = false; // first n negative, last n positive
};

struct SweepResult {
  SweepOptions opts;
  std::vector<SweepRecord> records;      // sorted by swept value
  std::optional<Real> gamma_star;        // smallest grid value from which the
                                         // split pattern holds through the end
  int failures = 0;
};

SweepResult run_sweep(const SweepOptions& opts);

void write_sweep_csv(std::ostream& os, const SweepResult& res, const RunManifest& manifest);

}  // namespace mopz
