#pragma once

#include "mopz/real.hpp"

#include <variant>
#include <vector>

namespace mopz {

enum class Family { AngelescoJacobi, JacobiLaguerre, LaguerreHermite, ClassicalJacobi };

const char* family_name(Family f);

// Angelesco-Jacobi parameters: weight (1-x)^alpha (x-a)^beta |x|^gamma on
// (a,0) u (0,1), with a < 0 and all exponents > -1.
struct ParamSet {
  Real alpha, beta, gamma, a;
};

struct JacobiLaguerreParams {
  Real beta, gamma, a;
};

struct LaguerreHermiteParams {
  Real gamma;
};

struct ClassicalJacobiParams {
  Real alpha, beta;
};

void validate(const ParamSet& p);
void validate(const JacobiLaguerreParams& p);
void validate(const LaguerreHermiteParams& p);
void validate(const ClassicalJacobiParams& p);

// see to_working_precision(Real): promote parameter bundles entering an
// elevated-precision region
ParamSet to_working_precision(const ParamSet& p);

using FamilyParams =
    std::variant<ParamSet, JacobiLaguerreParams, LaguerreHermiteParams, ClassicalJacobiParams>;

// Monic dense polynomial, ascending coefficients, tagged with its provenance.
// n is the family index: half-degree for the multiple families (degree 2n),
// the degree itself for classical Jacobi.
struct Poly {
  std::vector<Real> coeffs;
  Family family = Family::AngelescoJacobi;
  int n = 0;
  FamilyParams params = ParamSet{};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Real eval_poly(const Poly& p, const Real& x);
Real eval_derivative(const Poly& p, const Real& x, int order = 1);

// Coefficient-vector helpers used by construction and by the exact
// polynomial-algebra oracles (Rodrigues checks).
Real poly_eval(const std::vector<Real>& c, const Real& x);
std::vector<Real> poly_mul(const std::vector<Real>& u, const std::vector<Real>& v);
std::vector<Real> poly_derivative(const std::vector<Real>& c);
std::vector<Real> poly_linear_power(const Real& root, int m);  // (x - root)^m
// Synthetic division by (x - root); the remainder lands in *remainder if given.
std::vector<Real> poly_deflate(const std::vector<Real>& c, const Real& root,
                               Real* remainder = nullptr);
// 1 + max |c_i| for monic input: every root has |z| below this.
Real cauchy_root_bound(const std::vector<Real>& monic_coeffs);

}  // namespace mopz
