#pragma once

#include "mopz/poly.hpp"

#include <cstdint>
#include <random>

namespace mopz {

// Deterministic parameter sampler. Values are 53-bit dyadic rationals, so the
// same seed reproduces bit-identical parameters at any working precision.
// Exponents are drawn from (-0.9, 5) — exercising the singular range without
// grazing -1 — and the endpoint from (-5, -0.2).
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : eng_(seed) {}

  Real uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1p-53;
    return Real(lo + (hi - lo) * u);
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  ParamSet aj() {
    return ParamSet{uniform(-0.9, 5), uniform(-0.9, 5), uniform(-0.9, 5), uniform(-5, -0.2)};
  }

  JacobiLaguerreParams jl() {
    return JacobiLaguerreParams{uniform(-0.9, 5), uniform(-0.9, 5), uniform(-5, -0.2)};
  }

  LaguerreHermiteParams lh() { return LaguerreHermiteParams{uniform(-0.9, 5)}; }

  ClassicalJacobiParams jacobi() { return ClassicalJacobiParams{uniform(-0.9, 5), uniform(-0.9, 5)}; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mopz
