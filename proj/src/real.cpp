#include "mopz/real.hpp"

#include <mpfr.h>

namespace mopz {

namespace {

unsigned digits10_for_bits(unsigned bits) { return (bits * 301u + 999u) / 1000u; }

unsigned g_session_bits = kDefaultPrecisionBits;

struct SessionInit {
  SessionInit() { Real::default_precision(digits10_for_bits(kDefaultPrecisionBits)); }
};
const SessionInit g_session_init{};

}  // namespace

void set_precision_bits(unsigned bits) {
  if (bits < kMinPrecisionBits)
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  g_session_bits = bits;
  Real::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits() { return g_session_bits; }

Tolerance session_tolerance() {
  return Tolerance{pow2(10 - static_cast<long>(g_session_bits)),
                   pow2(20 - static_cast<long>(g_session_bits))};
}

Real pow2(long exponent) { return ldexp(Real(1), exponent); }

Real round_to_session(Real x) {
  const Real probe(0);
  mpfr_prec_round(x.backend().data(), mpfr_get_prec(probe.backend().data()), MPFR_RNDN);
  return x;
}

Real to_working_precision(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real pi_value() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real int_pow(const Real& base, long e) {
  if (e < 0) return 1 / int_pow(base, -e);
  Real acc = 1, b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    if (e > 1) b *= b;
  }
  return acc;
}

bool is_finite(const Real& x) { return mpfr_number_p(x.backend().data()) != 0; }

const Real& require_finite(const Real& x, const char* what) {
  if (!is_finite(x)) throw DomainError(std::string(what) + " must be finite");
  return x;
}

std::string decimal_string(const Real& x) {
  const unsigned digits = (g_session_bits * 302u + 999u) / 1000u;
  return x.str(digits);
}

Real parse_real(const std::string& text) {
  try {
    Real r(text);
    require_finite(r, "parsed value");
    return r;
  } catch (const std::exception&) {
    throw DomainError("cannot parse real number from '" + text + "'");
  }
}

}  // namespace mopz
