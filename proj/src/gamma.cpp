#include "mopz/gamma.hpp"

namespace mopz {

Real log_gamma(const Real& x) {
  require_finite(x, "log_gamma argument");
  if (!(x > 0)) throw DomainError("log_gamma requires x > 0");
  return lgamma(x);
}

Real gen_binomial(const Real& a, long k) {
  require_finite(a, "gen_binomial argument");
  if (k < 0) throw DomainError("gen_binomial requires k >= 0");
  if (!(a > Real(k) - 1)) throw DomainError("gen_binomial requires a > k - 1");
  if (k == 0) return Real(1);
  return exp(log_gamma(a + 1) - log_gamma(a - k + 1) - log_gamma(Real(k) + 1));
}

}  // namespace mopz
