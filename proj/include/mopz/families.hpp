#pragma once

#include "mopz/poly.hpp"

#include <optional>
#include <vector>

namespace mopz {

enum class MomentInterval { NegativeSegment, PositiveHalfLine, NegativeHalfLine };

// Moments m_k = integral of x^k w(x) over one interval of the weight.
struct MomentTable {
  MomentInterval interval;
  Family family;
  std::vector<Real> m;  // k = 0 .. kmax
};

// Jacobi-Laguerre moments: m_0, m_1 seeded by quadrature, the rest by the
// integration-by-parts recurrence
//   m_{k+2} = (beta+gamma+k+2+a) m_{k+1} - a (gamma+k+1) m_k,
// valid on (a,0) and (0,inf) alike.
MomentTable jl_moment_table(const JacobiLaguerreParams& p, int kmax, MomentInterval which);
// Same moments evaluated by direct quadrature (validation gate for the recurrence).
Real jl_moment_by_quadrature(const JacobiLaguerreParams& p, int k, MomentInterval which);

// Laguerre-Hermite moments are exact: Gamma((k+gamma+1)/2)/2, the negative
// half-line carrying the extra sign (-1)^k.
MomentTable lh_moment_table(const LaguerreHermiteParams& p, int kmax, MomentInterval which);

struct BuildDiagnostics {
  Real condition_proxy;  // |max pivot| / |min pivot| of the moment system
};

/// Monic Jacobi-Laguerre polynomial of degree 2n from the 2n x 2n moment
/// system, solved with full pivoting.
Poly build_jl(int n, const Real& beta, const Real& gamma, const Real& a,
              BuildDiagnostics* diag = nullptr);

/// Monic Laguerre-Hermite polynomial of degree 2n (exact moments).
Poly build_lh(int n, const Real& gamma, BuildDiagnostics* diag = nullptr);

// Raising-operator residuals, derivative expanded analytically and both
// sides divided by the common weight (see check_raising_aj).
Real check_raising_jl(int n, const Real& beta, const Real& gamma, const Real& a, const Real& x);
Real check_raising_lh(int n, const Real& gamma, const Real& x);

enum class JlShift { Beta, Gamma };

// Structure relations with the degree coefficient n (the printed coefficient
// 1 only holds for n = 1):
//   L_n^{(b+1,g)} = L_n^{(b,g)} - n x L_{n-1}^{(b+1,g+1)}
//   L_n^{(b,g+1)} = L_n^{(b,g)} - n (x-a) L_{n-1}^{(b+1,g+1)}
Real structure_identity_jl(JlShift kind, int n, const Real& beta, const Real& gamma, const Real& a,
                           const Real& x);
//   H_n^{(g+1)} = H_n^{(g)} - (n/2) H_{n-1}^{(g+1)}
Real structure_identity_lh(int n, const Real& gamma, const Real& x);

// Orthogonality residuals against the defining weights (max over k < n and
// both intervals, normalized by the absolute integral).
Real check_orthogonality_jl(int n, const JacobiLaguerreParams& p);
Real check_orthogonality_lh(int n, const LaguerreHermiteParams& p);

struct LimitRow {
  Real alpha;
  Real max_coeff_err;            // max relative coefficient error vs the limit family
  std::optional<Real> order;     // empirical order against the previous row
};

/// Coefficientwise convergence of the rescaled Angelesco-Jacobi polynomials
/// to the Jacobi-Laguerre / Laguerre-Hermite limits along an increasing
/// alpha grid.
std::vector<LimitRow> limit_convergence_jl(int n, const Real& beta, const Real& gamma,
                                           const Real& a, const std::vector<Real>& alpha_grid);
std::vector<LimitRow> limit_convergence_lh(int n, const Real& gamma,
                                           const std::vector<Real>& alpha_grid);

}  // namespace mopz
