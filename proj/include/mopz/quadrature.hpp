#pragma once

#include "mopz/real.hpp"

#include <cstddef>
#include <functional>

namespace mopz {

struct QuadratureResult {
  Real value;
  Real abs_error;   // |I_L - I_{L-1}| at acceptance
  Real l1;          // integral of |f|, the scale the error is judged against
  int levels = 0;
  std::size_t evaluations = 0;
};

// Integrand over a finite segment (lo, hi). dist_lo = x - lo and
// dist_hi = hi - x are supplied cancellation-free so that endpoint-singular
// factors like dist^gamma can be evaluated at full precision.
using SegmentIntegrand = std::function<Real(const Real& x, const Real& dist_lo, const Real& dist_hi)>;

// Integrand over (0, +inf); nodes near 0 are tiny positive values computed
// directly, so no separate distance argument is needed.
using HalfLineIntegrand = std::function<Real(const Real& x)>;

struct QuadratureOptions {
  Real rel_tol;                 // target |I_L - I_{L-1}| <= rel_tol * L1
  int max_levels = 12;
  // Smallest assumed 1 + (singularity exponent); bounds how far into the
  // endpoint the node tail must reach. 1/16 covers exponents >= -0.9375.
  Real exponent_floor = Real(1) / 16;
};

// Tanh-sinh (double-exponential) rule with level doubling until two
// successive levels agree to rel_tol relative to the L1 norm.
QuadratureResult integrate_segment(const SegmentIntegrand& f, const Real& lo, const Real& hi,
                                   const QuadratureOptions& opt);

// Exp-sinh rule on (0, +inf) for integrands with algebraic behavior at 0 and
// (super)exponential decay at infinity.
QuadratureResult integrate_half_line(const HalfLineIntegrand& f, const QuadratureOptions& opt);

QuadratureOptions default_quadrature_options();

}  // namespace mopz
