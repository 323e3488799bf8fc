#include "mopz/electro.hpp"

#include "mopz/quadrature.hpp"

#include <algorithm>

namespace mopz {

void validate(const Configuration& c) {
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    require_finite(c.points[i], "configuration point");
    if (!(c.points[i] > -1 && c.points[i] < 1))
      throw DomainError("configuration points must lie strictly inside (-1, 1)");
    if (i > 0 && !(c.points[i - 1] < c.points[i]))
      throw DomainError("configuration points must be strictly increasing");
  }
}

Poly build_classical_jacobi(int n, const Real& alpha, const Real& beta) {
  const ClassicalJacobiParams params{alpha, beta};
  validate(params);
  if (n < 0) throw DomainError("degree must be >= 0");
  Poly out;
  out.family = Family::ClassicalJacobi;
  out.n = n;
  out.params = params;
  // monic recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
  std::vector<Real> prev{Real(1)};
  if (n == 0) {
    out.coeffs = std::move(prev);
    return out;
  }
  const Real s = alpha + beta;
  auto a_k = [&](int k) -> Real {
    if (k == 0) return (beta - alpha) / (s + 2);
    const Real d = 2 * k + s;
    return (beta * beta - alpha * alpha) / (d * (d + 2));
  };
  auto b_k = [&](int k) -> Real {
    if (k == 1) {
      // the (1+alpha+beta) factor cancels against the denominator
      const Real d = s + 2;
      return 4 * (1 + alpha) * (1 + beta) / (d * d * (s + 3));
    }
    const Real d = 2 * k + s;
    return 4 * k * (k + alpha) * (k + beta) * (k + s) / (d * d * (d + 1) * (d - 1));
  };
  std::vector<Real> cur{-a_k(0), Real(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Real> next(cur.size() + 1, Real(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    const Real ak = a_k(k), bk = b_k(k);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] -= ak * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= bk * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.coeffs = std::move(cur);
  return out;
}

Real check_orthogonality_jacobi(int n, const Real& alpha, const Real& beta) {
  if (n < 1) throw DomainError("orthogonality check requires n >= 1");
  const Poly p = build_classical_jacobi(n, alpha, beta);
  QuadratureOptions opt = default_quadrature_options();
  Real worst = 0;
  for (int k = 0; k < n; ++k) {
    auto f = [&](const Real& x, const Real& dl, const Real& dr) -> Real {
      // dl = x + 1, dr = 1 - x
      return pow(dr, alpha) * pow(dl, beta) * int_pow(x, k) * eval_poly(p, x);
    };
    const QuadratureResult num = integrate_segment(f, Real(-1), Real(1), opt);
    worst = std::max(worst, abs(num.value) / std::max(num.l1, pow2(-(long)precision_bits())));
  }
  return worst;
}

EnergyBreakdown energy(const Configuration& c, const Real& alpha, const Real& beta) {
  validate(c);
  validate(ClassicalJacobiParams{alpha, beta});
  EnergyBreakdown e{Real(0), Real(0), Real(0)};
  const auto& x = c.points;
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t j = k + 1; j < x.size(); ++j) {
      const Real d = abs(x[k] - x[j]);
      if (d == 0) throw DomainError("coincident configuration points");
      e.mutual -= log(d);
    }
    e.external += (alpha + 1) / 2 * -log(abs(x[k] - 1)) + (beta + 1) / 2 * -log(abs(x[k] + 1));
  }
  e.total = e.mutual + e.external;
  return e;
}

std::vector<Real> energy_gradient(const Configuration& c, const Real& alpha, const Real& beta) {
  validate(c);
  validate(ClassicalJacobiParams{alpha, beta});
  const auto& x = c.points;
  std::vector<Real> g(x.size(), Real(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j == i) continue;
      const Real d = x[i] - x[j];
      if (d == 0) throw DomainError("coincident configuration points");
      g[i] -= 1 / d;
    }
    g[i] -= (alpha + 1) / (2 * (x[i] - 1));
    g[i] -= (beta + 1) / (2 * (x[i] + 1));
  }
  return g;
}

}  // namespace mopz
