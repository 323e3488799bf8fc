#pragma once

#include "mopz/poly.hpp"

#include <vector>

namespace mopz {

// Point configuration strictly inside (-1, 1), strictly increasing.
struct Configuration {
  std::vector<Real> points;
};

void validate(const Configuration& c);

struct EnergyBreakdown {
  Real mutual;
  Real external;
  Real total;  // mutual + external
};

/// Monic classical Jacobi polynomial, orthogonal on (-1,1) against
/// (1-x)^alpha (1+x)^beta, built from the three-term recurrence.
Poly build_classical_jacobi(int n, const Real& alpha, const Real& beta);

/// Orthogonality residual of a classical Jacobi polynomial (quadrature oracle).
Real check_orthogonality_jacobi(int n, const Real& alpha, const Real& beta);

/// Logarithmic energy with endpoint charges (alpha+1)/2 at 1 and (beta+1)/2 at -1.
EnergyBreakdown energy(const Configuration& x, const Real& alpha, const Real& beta);

/// Gradient of the energy; vanishes at the zeros of the degree-n Jacobi
/// polynomial (Stieltjes).
std::vector<Real> energy_gradient(const Configuration& x, const Real& alpha, const Real& beta);

}  // namespace mopz
