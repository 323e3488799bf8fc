#pragma once

#include "mopz/poly.hpp"
#include "mopz/quadrature.hpp"

namespace mopz {

enum class Side { Negative, Positive };  // (a,0) and (0,1) subintervals

/// Monic diagonal Angelesco-Jacobi polynomial of degree 2n, built from the
/// explicit triple-product expansion and normalized by its accumulated
/// leading coefficient (so monicity is exact).
Poly build_aj(int n, const ParamSet& p);

/// Closed form of P_n(0): gen_binomial(3n+a+b+g, n)^-1 * gen_binomial(n+g, n) * a^n.
Real aj_constant_term(int n, const ParamSet& p);

/// Weighted moment of q against the Angelesco-Jacobi weight on one
/// subinterval: integral of x^k q(x) w(x). Also returns (through *abs_scale)
/// the integral of |x^k q| w, computed piecewise between q's zeros, used to
/// normalize orthogonality residuals.
Real aj_weighted_moment(const Poly& q, const ParamSet& p, int k, Side side,
                        Real* abs_scale = nullptr);

/// Max over k = 0..n-1 and both subintervals of the normalized orthogonality
/// residual of build_aj(n, p).
Real check_orthogonality(int n, const ParamSet& p);

/// Relative residual of the raising identity
///   (2n+a+b+g+1) w(x) P_n = -d/dx[ w_+(x) P_{n-1}^{(a+1,b+1,g+1)} ],
/// with the derivative expanded analytically and both sides divided by the
/// common weight w(x) (the relative residual is invariant under that).
Real check_raising_aj(int n, const ParamSet& p, const Real& x);

/// Rodrigues formula check by exact polynomial algebra; requires all three
/// exponents to be nonnegative integers so both sides are polynomials.
bool check_rodrigues_integer_params(int n, const ParamSet& p);

}  // namespace mopz
