#pragma once

#include "mopz/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mopz {

// Sorted simple zeros split at the origin. For the diagonal multiple
// families |negative| == |positive| == n.
struct ZeroSet {
  std::vector<Real> negative;  // ascending, inside (lo, 0)
  std::vector<Real> positive;  // ascending, inside (0, hi)
  Real refined_to;             // max |P(z)/P'(z)| accepted during polish

  std::vector<Real> all() const {
    std::vector<Real> out = negative;
    out.insert(out.end(), positive.begin(), positive.end());
    return out;
  }
};

// nullopt bound = unbounded on that side; a Cauchy bound from the monic
// coefficients truncates the search interval first.
struct ZeroBounds {
  std::optional<Real> lo;
  std::optional<Real> hi;
};

ZeroSet find_zeros(const Poly& p, int count_neg, int count_pos, const ZeroBounds& bounds);

// Flat variant without the origin split (classical Jacobi on (-1,1), where a
// zero may sit at the origin itself).
std::vector<Real> find_zeros_interval(const Poly& p, int count, const Real& lo, const Real& hi);

struct OpenInterval {
  std::optional<Real> lo;  // nullopt = -inf
  std::optional<Real> hi;  // nullopt = +inf
  bool contains(const Real& x) const {
    return (!lo || *lo < x) && (!hi || x < *hi);
  }
};

enum class InterlacingPattern { SameCount, CountMinusOne };

struct InterlacingVerdict {
  bool holds = false;
  InterlacingPattern pattern = InterlacingPattern::SameCount;
  // chain position and the two offending values, when the chain breaks
  std::optional<std::pair<int, std::pair<Real, Real>>> first_violation;
};

// Whether p interlaces with q in the sense p ≺ q on the interval: counts
// equal or differing by one, zeros strictly alternating (equal counts must
// open with p's smallest zero).
InterlacingVerdict check_interlacing(const std::vector<Real>& q_zeros,
                                     const std::vector<Real>& p_zeros,
                                     const OpenInterval& interval);

// f_{n-1}(x) = sum_j 1/(x - y_j) + (beta+1)/(x-a) + (gamma+1)/x - (alpha+1)/(1-x),
// with y_j the zeros of the parameter-raised inner polynomial. Vanishes at
// every zero of the outer polynomial.
Real f_function(const Real& x, const ParamSet& p, const ZeroSet& inner_zeros);

// Magnitude scale of the terms that cancel at a zero of the outer polynomial:
// the sum of the absolute pole terms plus |f'(x)| * max(1, |x|). Residuals of
// f at computed zeros are judged against this scale.
Real f_pole_scale(const Real& x, const ParamSet& p, const ZeroSet& inner_zeros);

}  // namespace mopz
