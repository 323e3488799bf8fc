#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace mopz {

// Extended-precision scalar. Precision is a session-level setting in bits
// (>= 96, default 192); every Real created afterwards carries at least that
// many mantissa bits. Expression templates are off so that auto, ?: and
// std::function all behave like they do for double.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Parameter/domain violations (bad exponents, poles, unmet preconditions).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failures that carry diagnostics: quadrature non-convergence,
// root-isolation failure, singular moment systems.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMinPrecisionBits = 96;
inline constexpr unsigned kDefaultPrecisionBits = 192;

void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Temporarily elevated working precision (guard digits inside a solver);
// restores the previous session precision on scope exit.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;
  ~ScopedPrecision() { set_precision_bits(saved_); }

 private:
  unsigned saved_;
};

// Round a value computed under elevated precision back to the mantissa width
// of the current session.
Real round_to_session(Real x);

// Re-represent a value at the current session precision. Arithmetic results
// inherit operand precision, so values entering an elevated-precision region
// must be promoted first for the guard digits to take effect.
Real to_working_precision(const Real& x);

// Derived tolerance policy; everything scales with the session precision.
struct Tolerance {
  Real rel_identity;  // 2^(10 - bits): identity residuals must sit below this
  Real zero_cluster;  // 2^(20 - bits): minimum accepted zero separation
};
Tolerance session_tolerance();

Real pow2(long exponent);
Real pi_value();
Real int_pow(const Real& base, long e);

bool is_finite(const Real& x);
const Real& require_finite(const Real& x, const char* what);

// Decimal round-trip form with ceil(bits * 0.302) significant digits.
std::string decimal_string(const Real& x);
Real parse_real(const std::string& text);

}  // namespace mopz
