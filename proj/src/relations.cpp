#include "mopz/relations.hpp"

#include "mopz/angelesco.hpp"
#include "mopz/gamma.hpp"

#include <algorithm>

namespace mopz {

StructureCoeffs structure_coeffs(int n, const ParamSet& p) {
  validate(p);
  if (n < 1) throw DomainError("structure coefficients require n >= 1");
  const Real s = p.alpha + p.beta + p.gamma;
  StructureCoeffs c;
  c.A = (2 * n + s + 1) / (3 * n + s + 1);
  c.B = 1 - c.A;
  return c;
}

Real structure_identity_residual(ShiftKind kind, int n, const ParamSet& p, const Real& x) {
  return structure_identity_residual(kind, n, p, x, structure_coeffs(n, p));
}

Real structure_identity_residual(ShiftKind kind, int n, const ParamSet& p_in, const Real& x_in,
                                 const StructureCoeffs& coeffs) {
  validate(p_in);
  if (n < 1) throw DomainError("structure identities require n >= 1 (P_{n-1} must exist)");
  require_finite(x_in, "x");
  Real resid;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const ParamSet p = to_working_precision(p_in);
    const Real x = to_working_precision(x_in);
    const StructureCoeffs sc{to_working_precision(coeffs.A), to_working_precision(coeffs.B)};
    ParamSet shifted = p;
    Real quad;  // the quadratic factor multiplying P_{n-1}
    switch (kind) {
      case ShiftKind::Alpha:
        shifted.alpha += 1;
        quad = x * (x - p.a);
        break;
      case ShiftKind::Beta:
        shifted.beta += 1;
        quad = (x - 1) * x;
        break;
      case ShiftKind::Gamma:
        shifted.gamma += 1;
        quad = (x - p.a) * (x - 1);
        break;
    }
    const Real lhs = eval_poly(build_aj(n, shifted), x);
    const Real base = eval_poly(build_aj(n, p), x);
    const Real inner =
        eval_poly(build_aj(n - 1, ParamSet{p.alpha + 1, p.beta + 1, p.gamma + 1, p.a}), x);
    const Real rhs = sc.A * base + sc.B * quad * inner;
    resid = abs(lhs - rhs) / std::max(std::max(abs(lhs), abs(rhs)), Real(1));
  }
  return round_to_session(resid);
}

Real arithmetic_mean(int n, const ParamSet& p) {
  validate(p);
  if (n < 1) throw DomainError("arithmetic_mean requires n >= 1");
  return ((2 * n + p.beta + p.gamma) + p.a * (2 * n + p.gamma + p.alpha)) /
         (2 * (3 * n + p.alpha + p.beta + p.gamma));
}

Real arithmetic_mean_gamma_derivative(int n, const ParamSet& p) {
  validate(p);
  if (n < 1) throw DomainError("arithmetic_mean_gamma_derivative requires n >= 1");
  const Real d = 3 * n + p.alpha + p.beta + p.gamma;
  return (n + p.alpha + (n + p.beta) * p.a) / (2 * d * d);
}

Real geometric_mean_at_zero(int n, const ParamSet& p) {
  validate(p);
  if (n < 0) throw DomainError("n must be >= 0");
  if (n == 0) return Real(1);
  const Real s = p.alpha + p.beta + p.gamma;
  const Real lg = log_gamma(s + 2 * n + 1) + log_gamma(p.gamma + n + 1) -
                  log_gamma(s + 3 * n + 1) - log_gamma(p.gamma + 1);
  return exp(lg) * int_pow(abs(p.a), n);
}

Real geo_mean_log_gamma_derivative(int n, const ParamSet& p) {
  validate(p);
  if (n < 1) throw DomainError("geo_mean_log_gamma_derivative requires n >= 1");
  const Real s2n = p.alpha + p.beta + p.gamma + 2 * n;
  Real acc = 0;
  for (int m = 1; m <= n; ++m) acc += 1 / (p.gamma + m) - 1 / (s2n + m);
  return acc;
}

std::pair<Real, Real> endpoint_derivative_residuals(int n, const ParamSet& p, const Real& x) {
  validate(p);
  if (n < 1) throw DomainError("endpoint_derivative_residuals requires n >= 1");
  require_finite(x, "x");
  const Real h = pow2(-static_cast<long>(precision_bits()) / 3);
  ParamSet up = p, dn = p;
  up.beta += 1;
  dn.beta += 1;
  up.a += h;
  dn.a -= h;
  ParamSet shifted = p;
  shifted.beta += 1;
  const Real dPda = (eval_poly(build_aj(n, up), x) - eval_poly(build_aj(n, dn), x)) / (2 * h);
  const Real lhs = (x - p.a) * dPda;

  const Real D = 1 + p.alpha + p.beta + p.gamma + 3 * n;
  const Real shifted_val = eval_poly(build_aj(n, shifted), x);
  const Real base_val = eval_poly(build_aj(n, p), x);
  const Real inner_val =
      eval_poly(build_aj(n - 1, ParamSet{p.alpha + 1, p.beta + 1, p.gamma + 1, p.a}), x);
  const Real rhs1 = -(n + p.beta + 1) * (1 + p.alpha + p.beta + p.gamma + 2 * n) / D * base_val +
                    (p.beta + 1) * shifted_val;
  const Real rhs2 = -n * shifted_val + n * (n + p.beta + 1) / D * x * (x - 1) * inner_val;
  auto rel = [&](const Real& l, const Real& r) {
    return abs(l - r) / std::max(std::max(abs(l), abs(r)), Real(1));
  };
  return {rel(lhs, rhs1), rel(lhs, rhs2)};
}

const char* wrt_name(Wrt w) {
  switch (w) {
    case Wrt::Alpha: return "alpha";
    case Wrt::Beta: return "beta";
    case Wrt::Gamma: return "gamma";
    case Wrt::A: return "a";
  }
  return "?";
}

Real default_sensitivity_step() {
  const Real floor = pow2(-static_cast<long>(precision_bits()) / 3);
  return std::max(Real("1e-8"), floor);
}

namespace {

ParamSet perturbed(const ParamSet& p, Wrt wrt, const Real& delta) {
  ParamSet q = p;
  switch (wrt) {
    case Wrt::Alpha: q.alpha += delta; break;
    case Wrt::Beta: q.beta += delta; break;
    case Wrt::Gamma: q.gamma += delta; break;
    case Wrt::A: q.a += delta; break;
  }
  validate(q);
  return q;
}

}  // namespace

SensitivityVector zero_sensitivities(int n, const ParamSet& p, Wrt wrt, const Real& h) {
  validate(p);
  if (n < 1) throw DomainError("zero_sensitivities requires n >= 1");
  if (!(h > 0)) throw DomainError("sensitivity step must be positive");
  const ParamSet up = perturbed(p, wrt, h);
  const ParamSet dn = perturbed(p, wrt, -h);
  const ZeroBounds bounds_up{up.a, Real(1)};
  const ZeroBounds bounds_dn{dn.a, Real(1)};
  const ZeroSet zu = find_zeros(build_aj(n, up), n, n, bounds_up);
  const ZeroSet zd = find_zeros(build_aj(n, dn), n, n, bounds_dn);
  SensitivityVector sv;
  sv.wrt = wrt;
  sv.step = h;
  sv.values.reserve(2 * static_cast<std::size_t>(n));
  const std::vector<Real> au = zu.all(), ad = zd.all();
  for (std::size_t i = 0; i < au.size(); ++i) sv.values.push_back((au[i] - ad[i]) / (2 * h));
  return sv;
}

}  // namespace mopz
