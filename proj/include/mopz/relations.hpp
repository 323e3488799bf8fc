#pragma once

#include "mopz/poly.hpp"
#include "mopz/zeros.hpp"

#include <utility>
#include <vector>

namespace mopz {

// Convex-combination coefficients of the structure relations:
//   A_n = (2n+a+b+g+1)/(3n+a+b+g+1),  B_n = 1 - A_n = n/(3n+a+b+g+1).
// B is stored as the exact complement 1 - A so A + B == 1 holds bit-exactly.
struct StructureCoeffs {
  Real A;
  Real B;
};

StructureCoeffs structure_coeffs(int n, const ParamSet& p);

enum class ShiftKind { Alpha, Beta, Gamma };

// Relative residual |LHS - RHS| / max(|LHS|, |RHS|, 1) of the matching
// structure identity, e.g. kind == Gamma:
//   P_n^{(a,b,g+1)} = A_n P_n^{(a,b,g)} + B_n (x-a)(x-1) P_{n-1}^{(a+1,b+1,g+1)}.
Real structure_identity_residual(ShiftKind kind, int n, const ParamSet& p, const Real& x);
// Overload with caller-supplied coefficients (lets tests inject a broken pair).
Real structure_identity_residual(ShiftKind kind, int n, const ParamSet& p, const Real& x,
                                 const StructureCoeffs& coeffs);

/// (1/2) [(2n+b+g) + a (2n+g+a')] / (3n+a'+b+g), the mean of all 2n zeros.
Real arithmetic_mean(int n, const ParamSet& p);

/// d/dgamma of arithmetic_mean: (n+alpha + (n+beta) a) / (2 (3n+a+b+g)^2).
Real arithmetic_mean_gamma_derivative(int n, const ParamSet& p);

/// |P_n(0)| via the Gamma-ratio closed form; equals the product of the
/// absolute values of all zeros.
Real geometric_mean_at_zero(int n, const ParamSet& p);

/// d/dgamma log |P_n(0)|, telescoped to the closed n-term sum
///   sum_{m=1..n} [ 1/(gamma+m) - 1/(alpha+beta+gamma+2n+m) ];
/// strictly positive for admissible parameters.
Real geo_mean_log_gamma_derivative(int n, const ParamSet& p);

// Relative residuals of the two endpoint-derivative identities for
// (x - a) d/da P_n^{(alpha,beta+1,gamma)}(x; a), the a-derivative taken by
// central finite differences with step 2^(-precision/3).
std::pair<Real, Real> endpoint_derivative_residuals(int n, const ParamSet& p, const Real& x);

enum class Wrt { Alpha, Beta, Gamma, A };

const char* wrt_name(Wrt w);

struct SensitivityVector {
  Wrt wrt = Wrt::Gamma;
  Real step;
  std::vector<Real> values;  // 2n entries, negative zeros first, index-matched
};

/// Central finite differences of the sorted zeros with respect to one
/// parameter; both perturbed parameter sets must stay admissible.
SensitivityVector zero_sensitivities(int n, const ParamSet& p, Wrt wrt, const Real& h);

Real default_sensitivity_step();

}  // namespace mopz
