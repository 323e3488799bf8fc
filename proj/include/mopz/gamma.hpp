#pragma once

#include "mopz/real.hpp"

namespace mopz {

/// ln Gamma(x) for x > 0; accurate to well under 4 ulp at working precision.
Real log_gamma(const Real& x);

/// Generalized binomial Gamma(a+1) / (Gamma(a-k+1) k!), computed in log space.
/// Requires a > k - 1 so every Gamma argument stays positive.
Real gen_binomial(const Real& a, long k);

}  // namespace mopz
