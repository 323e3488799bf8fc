#include "mopz/gamma.hpp"
#include "mopz/sampling.hpp"

#include <doctest.h>

using namespace mopz;

namespace {
struct Session {
  Session() { set_precision_bits(192); }
};
const Session session;

bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }
}  // namespace

TEST_CASE("precision session and tolerances") {
  CHECK(precision_bits() == 192);
  const Tolerance tol = session_tolerance();
  CHECK(tol.rel_identity == pow2(10 - 192));
  CHECK(tol.zero_cluster == pow2(20 - 192));
  CHECK(tol.rel_identity > 0);
  CHECK(tol.rel_identity < 1);
  CHECK_THROWS_AS(set_precision_bits(64), DomainError);

  // residual scales must shrink when precision grows
  set_precision_bits(256);
  CHECK(session_tolerance().rel_identity == pow2(10 - 256));
  set_precision_bits(192);
}

TEST_CASE("decimal strings round-trip at session precision") {
  const Real x = sqrt(Real(2));
  const Real y = parse_real(decimal_string(x));
  CHECK(abs(x - y) <= abs(x) * pow2(-180));
  CHECK_THROWS_AS(parse_real("not-a-number"), DomainError);
}

TEST_CASE("log_gamma values") {
  CHECK(log_gamma(Real(1)) == 0);
  CHECK(log_gamma(Real(2)) == 0);
  // Gamma(1/2) = sqrt(pi), evaluated at working precision
  const Real want = log(sqrt(pi_value()));
  CHECK(close(log_gamma(Real(1) / 2), want, abs(want) * pow2(-186)));
  CHECK_THROWS_AS(log_gamma(Real(0)), DomainError);
  CHECK_THROWS_AS(log_gamma(Real(-3)), DomainError);
}

TEST_CASE("gen_binomial values and errors") {
  const Real tol = session_tolerance().rel_identity;
  CHECK(close(gen_binomial(Real(3), 1), Real(3), tol * 3));
  CHECK(gen_binomial(Real("4.7"), 0) == 1);
  CHECK(close(gen_binomial(Real("5.5"), 2), Real("12.375"), tol * 16));
  CHECK_THROWS_AS(gen_binomial(Real(2), 3), DomainError);   // a <= k - 1
  CHECK_THROWS_AS(gen_binomial(Real(1), -1), DomainError);  // negative k
}

TEST_CASE("gen_binomial matches integer binomials exactly after rounding") {
  for (long n = 0; n <= 30; ++n) {
    Real exact = 1;
    for (long k = 0; k <= n; ++k) {
      const Real got = gen_binomial(Real(n), k);
      CHECK(round(got) == exact);
      CHECK(abs(got - exact) < abs(exact) * pow2(-160));
      exact = exact * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("Pascal identity for generalized binomials") {
  const Real tol = session_tolerance().rel_identity;
  ParamSampler rng(2024);
  for (long k = 1; k <= 12; ++k) {
    for (int rep = 0; rep < 8; ++rep) {
      const Real a = Real(k) + rng.uniform(0.0, 10.0);
      const Real lhs = gen_binomial(a, k);
      const Real rhs = gen_binomial(a - 1, k - 1) + gen_binomial(a - 1, k);
      CHECK(abs(lhs - rhs) <= tol * abs(lhs));
    }
  }
}
