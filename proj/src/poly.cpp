#include "mopz/poly.hpp"

#include <algorithm>

namespace mopz {

const char* family_name(Family f) {
  switch (f) {
    case Family::AngelescoJacobi: return "angelesco-jacobi";
    case Family::JacobiLaguerre: return "jacobi-laguerre";
    case Family::LaguerreHermite: return "laguerre-hermite";
    case Family::ClassicalJacobi: return "classical-jacobi";
  }
  return "unknown";
}

void validate(const ParamSet& p) {
  require_finite(p.alpha, "alpha");
  require_finite(p.beta, "beta");
  require_finite(p.gamma, "gamma");
  require_finite(p.a, "a");
  if (!(p.alpha > -1)) throw DomainError("alpha must be > -1");
  if (!(p.beta > -1)) throw DomainError("beta must be > -1");
  if (!(p.gamma > -1)) throw DomainError("gamma must be > -1");
  if (!(p.a < 0)) throw DomainError("a must be < 0");
}

void validate(const JacobiLaguerreParams& p) {
  require_finite(p.beta, "beta");
  require_finite(p.gamma, "gamma");
  require_finite(p.a, "a");
  if (!(p.beta > -1)) throw DomainError("beta must be > -1");
  if (!(p.gamma > -1)) throw DomainError("gamma must be > -1");
  if (!(p.a < 0)) throw DomainError("a must be < 0");
}

void validate(const LaguerreHermiteParams& p) {
  require_finite(p.gamma, "gamma");
  if (!(p.gamma > -1)) throw DomainError("gamma must be > -1");
}

void validate(const ClassicalJacobiParams& p) {
  require_finite(p.alpha, "alpha");
  require_finite(p.beta, "beta");
  if (!(p.alpha > -1)) throw DomainError("alpha must be > -1");
  if (!(p.beta > -1)) throw DomainError("beta must be > -1");
}

ParamSet to_working_precision(const ParamSet& p) {
  return ParamSet{to_working_precision(p.alpha), to_working_precision(p.beta),
                  to_working_precision(p.gamma), to_working_precision(p.a)};
}

Real poly_eval(const std::vector<Real>& c, const Real& x) {
  if (c.empty()) return Real(0);
  Real acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real eval_poly(const Poly& p, const Real& x) { return poly_eval(p.coeffs, x); }

Real eval_derivative(const Poly& p, const Real& x, int order) {
  if (order < 1) throw DomainError("derivative order must be >= 1");
  std::vector<Real> c = p.coeffs;
  for (int i = 0; i < order && c.size() > 1; ++i) c = poly_derivative(c);
  if (static_cast<int>(p.coeffs.size()) - 1 < order) return Real(0);
  return poly_eval(c, x);
}

std::vector<Real> poly_mul(const std::vector<Real>& u, const std::vector<Real>& v) {
  if (u.empty() || v.empty()) return {};
  std::vector<Real> out(u.size() + v.size() - 1, Real(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
  return out;
}

std::vector<Real> poly_derivative(const std::vector<Real>& c) {
  if (c.size() <= 1) return {Real(0)};
  std::vector<Real> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Real(static_cast<long>(i));
  return out;
}

std::vector<Real> poly_linear_power(const Real& root, int m) {
  std::vector<Real> acc{Real(1)};
  const std::vector<Real> lin{-root, Real(1)};
  for (int i = 0; i < m; ++i) acc = poly_mul(acc, lin);
  return acc;
}

std::vector<Real> poly_deflate(const std::vector<Real>& c, const Real& root, Real* remainder) {
  if (c.size() < 2) throw DomainError("cannot deflate a constant polynomial");
  std::vector<Real> q(c.size() - 1);
  Real carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * root;
  }
  if (remainder) *remainder = carry;
  return q;
}

Real cauchy_root_bound(const std::vector<Real>& monic_coeffs) {
  Real m = 0;
  for (std::size_t i = 0; i + 1 < monic_coeffs.size(); ++i) m = std::max(m, abs(monic_coeffs[i]));
  return 1 + m;
}

}  // namespace mopz
