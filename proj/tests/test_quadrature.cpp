#include "mopz/gamma.hpp"
#include "mopz/quadrature.hpp"

#include <doctest.h>

using namespace mopz;

namespace {
struct Session {
  Session() { set_precision_bits(192); }
};
const Session session;
}  // namespace

TEST_CASE("tanh-sinh handles endpoint singularities at full precision") {
  QuadratureOptions opt = default_quadrature_options();

  // int_0^1 x^(-1/2) dx = 2, singular at the left endpoint
  auto f = [](const Real&, const Real& dl, const Real&) -> Real { return 1 / sqrt(dl); };
  const QuadratureResult r = integrate_segment(f, Real(0), Real(1), opt);
  CHECK(abs(r.value - 2) < pow2(-170));

  // int_0^1 x^(-0.9) (1-x)^(-0.9) dx = Beta(0.1, 0.1), singular at both ends
  auto g = [](const Real&, const Real& dl, const Real& dr) -> Real {
    return pow(dl, Real("-0.9")) * pow(dr, Real("-0.9"));
  };
  const Real beta = exp(2 * log_gamma(Real("0.1")) - log_gamma(Real("0.2")));
  const QuadratureResult rg = integrate_segment(g, Real(0), Real(1), opt);
  CHECK(abs(rg.value - beta) < abs(beta) * pow2(-160));
}

TEST_CASE("tanh-sinh resolves an exactly-zero integral against its L1 norm") {
  QuadratureOptions opt = default_quadrature_options();
  auto f = [](const Real& x, const Real&, const Real&) -> Real { return x * x - Real(1) / 3; };
  const QuadratureResult r = integrate_segment(f, Real(0), Real(1), opt);
  CHECK(abs(r.value) < pow2(-180) * r.l1);
  CHECK(r.l1 > Real("0.1"));
}

TEST_CASE("exp-sinh reproduces Gamma-function integrals") {
  QuadratureOptions opt = default_quadrature_options();
  // int_0^inf x^(-1/2) e^-x dx = Gamma(1/2) = sqrt(pi)
  auto f = [](const Real& x) -> Real { return exp(-x) / sqrt(x); };
  const QuadratureResult r = integrate_half_line(f, opt);
  CHECK(abs(r.value - sqrt(pi_value())) < pow2(-170));

  // Gaussian tail: int_0^inf x^2 e^{-x^2} dx = sqrt(pi)/4
  auto g = [](const Real& x) -> Real { return x * x * exp(-x * x); };
  const QuadratureResult rg = integrate_half_line(g, opt);
  CHECK(abs(rg.value - sqrt(pi_value()) / 4) < pow2(-170));
}

TEST_CASE("non-convergence raises a diagnostic error") {
  QuadratureOptions opt = default_quadrature_options();
  opt.max_levels = 2;  // starve the rule so it cannot possibly settle
  auto f = [](const Real&, const Real& dl, const Real&) -> Real { return 1 / sqrt(dl); };
  CHECK_THROWS_AS(integrate_segment(f, Real(0), Real(1), opt), NumericError);
  CHECK_THROWS_AS(integrate_segment(f, Real(1), Real(0), opt), DomainError);
}
