#include "mopz/families.hpp"

#include "mopz/angelesco.hpp"
#include "mopz/gamma.hpp"
#include "mopz/quadrature.hpp"
#include "mopz/zeros.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mopz {

namespace {

// Dense solve with full (row and column) pivoting; small systems only.
std::vector<Real> solve_full_pivot(std::vector<std::vector<Real>> A, std::vector<Real> b,
                                   Real* condition_proxy) {
  const std::size_t n = A.size();
  std::vector<std::size_t> col_of(n);
  for (std::size_t i = 0; i < n; ++i) col_of[i] = i;
  Real max_pivot = 0, min_pivot = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pr = step, pc = step;
    Real best = abs(A[step][step]);
    for (std::size_t r = step; r < n; ++r)
      for (std::size_t c = step; c < n; ++c)
        if (abs(A[r][c]) > best) {
          best = abs(A[r][c]);
          pr = r;
          pc = c;
        }
    if (best == 0) throw NumericError("moment system is singular (zero pivot); raise precision");
    std::swap(A[step], A[pr]);
    std::swap(b[step], b[pr]);
    if (pc != step) {
      for (std::size_t r = 0; r < n; ++r) std::swap(A[r][step], A[r][pc]);
      std::swap(col_of[step], col_of[pc]);
    }
    if (step == 0) {
      max_pivot = best;
      min_pivot = best;
    } else {
      max_pivot = std::max(max_pivot, best);
      min_pivot = std::min(min_pivot, best);
    }
    for (std::size_t r = step + 1; r < n; ++r) {
      const Real f = A[r][step] / A[step][step];
      if (f == 0) continue;
      A[r][step] = 0;
      for (std::size_t c = step + 1; c < n; ++c) A[r][c] -= f * A[step][c];
      b[r] -= f * b[step];
    }
  }
  if (condition_proxy) *condition_proxy = max_pivot / min_pivot;
  std::vector<Real> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Real acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= A[i][c] * y[c];
    y[i] = acc / A[i][i];
  }
  std::vector<Real> x(n);
  for (std::size_t i = 0; i < n; ++i) x[col_of[i]] = y[i];
  return x;
}

Poly solve_moment_system(int n, Family family, const FamilyParams& params,
                         const MomentTable& first, const MomentTable& second,
                         BuildDiagnostics* diag) {
  Poly out;
  out.family = family;
  out.n = n;
  out.params = params;
  if (n == 0) {
    out.coeffs = {Real(1)};
    if (diag) diag->condition_proxy = 1;
    return out;
  }
  const int N = 2 * n;
  std::vector<std::vector<Real>> A;
  std::vector<Real> b;
  A.reserve(static_cast<std::size_t>(N));
  b.reserve(static_cast<std::size_t>(N));
  for (const MomentTable* tab : {&first, &second}) {
    if (static_cast<int>(tab->m.size()) < 3 * n)
      throw DomainError("moment table too short for the requested degree");
    for (int k = 0; k < n; ++k) {
      std::vector<Real> row(static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i) row[static_cast<std::size_t>(i)] = tab->m[static_cast<std::size_t>(k + i)];
      A.push_back(std::move(row));
      b.push_back(-tab->m[static_cast<std::size_t>(k + N)]);
    }
  }
  BuildDiagnostics local{};
  std::vector<Real> c = solve_full_pivot(std::move(A), std::move(b), &local.condition_proxy);
  if (diag) *diag = local;
  out.coeffs = std::move(c);
  out.coeffs.push_back(Real(1));
  return out;
}

}  // namespace

Real jl_moment_by_quadrature(const JacobiLaguerreParams& p, int k, MomentInterval which) {
  validate(p);
  if (k < 0) throw DomainError("moment order must be >= 0");
  QuadratureOptions opt = default_quadrature_options();
  if (which == MomentInterval::NegativeSegment) {
    // (a, 0): dl = x - a, dr = -x
    auto f = [&p, k](const Real& x, const Real& dl, const Real& dr) -> Real {
      return pow(dl, p.beta) * pow(dr, p.gamma) * exp(-x) * int_pow(-dr, k);
    };
    return integrate_segment(f, p.a, Real(0), opt).value;
  }
  if (which != MomentInterval::PositiveHalfLine)
    throw DomainError("Jacobi-Laguerre weight lives on (a,0) and (0,inf)");
  auto f = [&p, k](const Real& x) -> Real {
    return pow(x, p.gamma + k) * pow(x - p.a, p.beta) * exp(-x);
  };
  return integrate_half_line(f, opt).value;
}

MomentTable jl_moment_table(const JacobiLaguerreParams& p, int kmax, MomentInterval which) {
  validate(p);
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  MomentTable tab;
  tab.interval = which;
  tab.family = Family::JacobiLaguerre;
  tab.m.resize(static_cast<std::size_t>(kmax) + 1);
  tab.m[0] = jl_moment_by_quadrature(p, 0, which);
  tab.m[1] = jl_moment_by_quadrature(p, 1, which);
  for (int k = 0; k + 2 <= kmax; ++k) {
    tab.m[static_cast<std::size_t>(k + 2)] =
        (p.beta + p.gamma + k + 2 + p.a) * tab.m[static_cast<std::size_t>(k + 1)] -
        p.a * (p.gamma + k + 1) * tab.m[static_cast<std::size_t>(k)];
  }
  return tab;
}

MomentTable lh_moment_table(const LaguerreHermiteParams& p, int kmax, MomentInterval which) {
  validate(p);
  if (which == MomentInterval::NegativeSegment)
    throw DomainError("Laguerre-Hermite weight lives on the two half-lines");
  MomentTable tab;
  tab.interval = which;
  tab.family = Family::LaguerreHermite;
  tab.m.resize(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    Real v = exp(log_gamma((k + p.gamma + 1) / 2)) / 2;
    if (which == MomentInterval::NegativeHalfLine && (k % 2) == 1) v = -v;
    tab.m[static_cast<std::size_t>(k)] = v;
  }
  return tab;
}

Poly build_jl(int n, const Real& beta, const Real& gamma, const Real& a, BuildDiagnostics* diag) {
  if (n < 0) throw DomainError("build_jl requires n >= 0");
  const JacobiLaguerreParams p{beta, gamma, a};
  validate(p);
  if (n == 0)
    return solve_moment_system(0, Family::JacobiLaguerre, p, MomentTable{}, MomentTable{}, diag);
  // guard digits: the recurrence and the solve conditioning eat into the
  // plain session budget; build high and round back
  Poly out;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const JacobiLaguerreParams hp{to_working_precision(beta), to_working_precision(gamma),
                                  to_working_precision(a)};
    const int kmax = 3 * n;
    const MomentTable neg = jl_moment_table(hp, kmax, MomentInterval::NegativeSegment);
    const MomentTable pos = jl_moment_table(hp, kmax, MomentInterval::PositiveHalfLine);
    out = solve_moment_system(n, Family::JacobiLaguerre, p, neg, pos, diag);
  }
  for (Real& c : out.coeffs) c = round_to_session(c);
  if (diag) diag->condition_proxy = round_to_session(diag->condition_proxy);
  return out;
}

Poly build_lh(int n, const Real& gamma, BuildDiagnostics* diag) {
  if (n < 0) throw DomainError("build_lh requires n >= 0");
  const LaguerreHermiteParams p{gamma};
  validate(p);
  if (n == 0)
    return solve_moment_system(0, Family::LaguerreHermite, p, MomentTable{}, MomentTable{}, diag);
  Poly out;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const LaguerreHermiteParams hp{to_working_precision(gamma)};
    const int kmax = 3 * n;
    const MomentTable neg = lh_moment_table(hp, kmax, MomentInterval::NegativeHalfLine);
    const MomentTable pos = lh_moment_table(hp, kmax, MomentInterval::PositiveHalfLine);
    out = solve_moment_system(n, Family::LaguerreHermite, p, neg, pos, diag);
  }
  for (Real& c : out.coeffs) c = round_to_session(c);
  if (diag) diag->condition_proxy = round_to_session(diag->condition_proxy);
  return out;
}

Real check_raising_jl(int n, const Real& beta, const Real& gamma, const Real& a, const Real& x) {
  validate(JacobiLaguerreParams{beta, gamma, a});
  if (n < 1) throw DomainError("check_raising_jl requires n >= 1");
  require_finite(x, "x");
  if (x == a || x == 0) throw DomainError("x sits on a weight singularity");
  Real resid;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const Real hb = to_working_precision(beta), hg = to_working_precision(gamma);
    const Real ha = to_working_precision(a), hx = to_working_precision(x);
    const Poly ln = build_jl(n, hb, hg, ha);
    const Poly inner = build_jl(n - 1, hb + 1, hg + 1, ha);
    const Real q = eval_poly(inner, hx);
    const Real dq = eval_derivative(inner, hx);
    const Real lhs = eval_poly(ln, hx);
    // -(1/w) d/dx[w_+ L]; w_+ / w = (x-a) x, log-derivative of w includes -1
    const Real rhs = -((hb + 1) * hx * q + (hg + 1) * (hx - ha) * q - (hx - ha) * hx * q +
                       (hx - ha) * hx * dq);
    const Real denom =
        std::max(std::max(abs(lhs), abs(rhs)), pow2(-2 * static_cast<long>(precision_bits())));
    resid = abs(lhs - rhs) / denom;
  }
  return round_to_session(resid);
}

Real check_raising_lh(int n, const Real& gamma, const Real& x) {
  validate(LaguerreHermiteParams{gamma});
  if (n < 1) throw DomainError("check_raising_lh requires n >= 1");
  require_finite(x, "x");
  if (x == 0) throw DomainError("x sits on the weight singularity at 0");
  Real resid;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const Real hg = to_working_precision(gamma), hx = to_working_precision(x);
    const Poly hn = build_lh(n, hg);
    const Poly inner = build_lh(n - 1, hg + 1);
    const Real q = eval_poly(inner, hx);
    const Real dq = eval_derivative(inner, hx);
    const Real lhs = eval_poly(hn, hx);
    // -(1/2)(1/w) d/dx[w_+ H]; w_+ / w = x, log-derivative includes -2x
    const Real rhs = -(hg + 1) / 2 * q + hx * hx * q - hx / 2 * dq;
    const Real denom =
        std::max(std::max(abs(lhs), abs(rhs)), pow2(-2 * static_cast<long>(precision_bits())));
    resid = abs(lhs - rhs) / denom;
  }
  return round_to_session(resid);
}

Real structure_identity_jl(JlShift kind, int n, const Real& beta, const Real& gamma, const Real& a,
                           const Real& x) {
  validate(JacobiLaguerreParams{beta, gamma, a});
  if (n < 1) throw DomainError("structure_identity_jl requires n >= 1");
  require_finite(x, "x");
  Real resid;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const Real hb = to_working_precision(beta), hg = to_working_precision(gamma);
    const Real ha = to_working_precision(a), hx = to_working_precision(x);
    const Poly base = build_jl(n, hb, hg, ha);
    const Poly inner = build_jl(n - 1, hb + 1, hg + 1, ha);
    Real lhs, rhs;
    if (kind == JlShift::Beta) {
      lhs = eval_poly(build_jl(n, hb + 1, hg, ha), hx);
      rhs = eval_poly(base, hx) - n * hx * eval_poly(inner, hx);
    } else {
      lhs = eval_poly(build_jl(n, hb, hg + 1, ha), hx);
      rhs = eval_poly(base, hx) - n * (hx - ha) * eval_poly(inner, hx);
    }
    resid = abs(lhs - rhs) / std::max(std::max(abs(lhs), abs(rhs)), Real(1));
  }
  return round_to_session(resid);
}

Real structure_identity_lh(int n, const Real& gamma, const Real& x) {
  validate(LaguerreHermiteParams{gamma});
  if (n < 1) throw DomainError("structure_identity_lh requires n >= 1");
  require_finite(x, "x");
  Real resid;
  {
    ScopedPrecision guard(precision_bits() + 64);
    const Real hg = to_working_precision(gamma), hx = to_working_precision(x);
    const Real lhs = eval_poly(build_lh(n, hg + 1), hx);
    const Real rhs = eval_poly(build_lh(n, hg), hx) -
                     Real(n) / 2 * eval_poly(build_lh(n - 1, hg + 1), hx);
    resid = abs(lhs - rhs) / std::max(std::max(abs(lhs), abs(rhs)), Real(1));
  }
  return round_to_session(resid);
}

namespace {

// |integral x^k q w| and the absolute integral over an unbounded or bounded
// interval, split at q's zeros so each piece is single-signed.
struct MomentPair {
  Real value;
  Real abs_scale;
};

MomentPair jl_weighted_moment(const Poly& q, const JacobiLaguerreParams& p, int k,
                              MomentInterval which, const std::vector<Real>& cuts) {
  QuadratureOptions opt = default_quadrature_options();
  QuadratureOptions loose = opt;
  loose.rel_tol = pow2(-40);
  MomentPair out{Real(0), Real(0)};
  if (which == MomentInterval::NegativeSegment) {
    auto f = [&q, &p, k](const Real& x, const Real& dl, const Real& dr) -> Real {
      return pow(dl, p.beta) * pow(dr, p.gamma) * exp(-x) * int_pow(-dr, k) * eval_poly(q, x);
    };
    out.value = integrate_segment(f, p.a, Real(0), opt).value;
    Real a0 = p.a;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
      const Real b0 = i < cuts.size() ? cuts[i] : Real(0);
      out.abs_scale += abs(integrate_segment(f, a0, b0, loose).value);
      a0 = b0;
    }
    return out;
  }
  auto f = [&q, &p, k](const Real& x) -> Real {
    return pow(x, p.gamma + k) * pow(x - p.a, p.beta) * exp(-x) * eval_poly(q, x);
  };
  out.value = integrate_half_line(f, opt).value;
  // pieces: (0, z_1), ..., (z_m, z_m + tail); the exponential tail beyond the
  // last zero is integrated as a shifted half-line
  Real a0 = 0;
  auto seg = [&](const Real& lo, const Real& hi) -> Real {
    auto g = [&](const Real& x, const Real&, const Real&) -> Real {
      return pow(x, p.gamma + k) * pow(x - p.a, p.beta) * exp(-x) * eval_poly(q, x);
    };
    auto g0 = [&](const Real& x, const Real& dl, const Real&) -> Real {
      return pow(dl, p.gamma + k) * pow(x - p.a, p.beta) * exp(-x) * eval_poly(q, x);
    };
    return integrate_segment(lo == 0 ? SegmentIntegrand(g0) : SegmentIntegrand(g), lo, hi, loose)
        .value;
  };
  for (const Real& z : cuts) {
    out.abs_scale += abs(seg(a0, z));
    a0 = z;
  }
  auto tail = [&](const Real& t) -> Real {
    const Real x = a0 + t;
    return pow(x, p.gamma + k) * pow(x - p.a, p.beta) * exp(-x) * eval_poly(q, x);
  };
  out.abs_scale += abs(integrate_half_line(tail, loose).value);
  return out;
}

MomentPair lh_weighted_moment(const Poly& q, const LaguerreHermiteParams& p, int k,
                              MomentInterval which, const std::vector<Real>& cuts) {
  QuadratureOptions opt = default_quadrature_options();
  QuadratureOptions loose = opt;
  loose.rel_tol = pow2(-40);
  // mirror the negative half-line onto (0, inf)
  const int sgn = which == MomentInterval::NegativeHalfLine ? -1 : 1;
  auto f = [&q, &p, k, sgn](const Real& t) -> Real {
    const Real x = sgn * t;
    return int_pow(x, k) * pow(t, p.gamma) * exp(-t * t) * eval_poly(q, x);
  };
  MomentPair out{integrate_half_line(f, opt).value, Real(0)};
  // cuts given as |zeros| ascending on the mirrored axis
  Real a0 = 0;
  auto piece = [&](const Real& lo, const Real& hi) -> Real {
    auto g0 = [&](const Real& t, const Real& dl, const Real&) -> Real {
      const Real x = sgn * t;
      return int_pow(x, k) * pow(dl, p.gamma) * exp(-t * t) * eval_poly(q, x);
    };
    auto g = [&](const Real& t, const Real&, const Real&) -> Real {
      const Real x = sgn * t;
      return int_pow(x, k) * pow(t, p.gamma) * exp(-t * t) * eval_poly(q, x);
    };
    return integrate_segment(lo == 0 ? SegmentIntegrand(g0) : SegmentIntegrand(g), lo, hi, loose)
        .value;
  };
  for (const Real& z : cuts) {
    out.abs_scale += abs(piece(a0, z));
    a0 = z;
  }
  auto tail = [&](const Real& t) -> Real { return f(a0 + t); };
  out.abs_scale += abs(integrate_half_line(tail, loose).value);
  return out;
}

}  // namespace

Real check_orthogonality_jl(int n, const JacobiLaguerreParams& p) {
  validate(p);
  if (n < 1) throw DomainError("check_orthogonality_jl requires n >= 1");
  const Poly q = build_jl(n, p.beta, p.gamma, p.a);
  const ZeroSet zs = find_zeros(q, n, n, ZeroBounds{p.a, std::nullopt});
  Real worst = 0;
  for (int k = 0; k < n; ++k) {
    const MomentPair neg = jl_weighted_moment(q, p, k, MomentInterval::NegativeSegment, zs.negative);
    const MomentPair pos = jl_weighted_moment(q, p, k, MomentInterval::PositiveHalfLine, zs.positive);
    worst = std::max(worst, abs(neg.value) / neg.abs_scale);
    worst = std::max(worst, abs(pos.value) / pos.abs_scale);
  }
  return worst;
}

Real check_orthogonality_lh(int n, const LaguerreHermiteParams& p) {
  validate(p);
  if (n < 1) throw DomainError("check_orthogonality_lh requires n >= 1");
  const Poly q = build_lh(n, p.gamma);
  const ZeroSet zs = find_zeros(q, n, n, ZeroBounds{std::nullopt, std::nullopt});
  std::vector<Real> neg_mirror;  // |negative zeros| ascending
  for (auto it = zs.negative.rbegin(); it != zs.negative.rend(); ++it) neg_mirror.push_back(-*it);
  Real worst = 0;
  for (int k = 0; k < n; ++k) {
    const MomentPair neg = lh_weighted_moment(q, p, k, MomentInterval::NegativeHalfLine, neg_mirror);
    const MomentPair pos = lh_weighted_moment(q, p, k, MomentInterval::PositiveHalfLine, zs.positive);
    worst = std::max(worst, abs(neg.value) / neg.abs_scale);
    worst = std::max(worst, abs(pos.value) / pos.abs_scale);
  }
  return worst;
}

namespace {

std::vector<LimitRow> convergence_table(const Poly& target, const std::vector<Real>& alpha_grid,
                                        const std::function<Poly(const Real&)>& scaled_aj) {
  if (alpha_grid.empty()) throw DomainError("alpha grid must not be empty");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] >= 10)) throw DomainError("alpha grid entries must be >= 10");
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1]))
      throw DomainError("alpha grid must be increasing");
  }
  std::vector<LimitRow> rows;
  rows.reserve(alpha_grid.size());
  for (const Real& alpha : alpha_grid) {
    const Poly s = scaled_aj(alpha);
    Real err = 0;
    for (std::size_t i = 0; i < target.coeffs.size(); ++i) {
      err = std::max(err, abs(s.coeffs[i] - target.coeffs[i]) /
                              std::max(Real(1), abs(target.coeffs[i])));
    }
    LimitRow row;
    row.alpha = alpha;
    row.max_coeff_err = err;
    if (!rows.empty() && rows.back().max_coeff_err > 0 && err > 0) {
      row.order = log(rows.back().max_coeff_err / err) / log(alpha / rows.back().alpha);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<LimitRow> limit_convergence_jl(int n, const Real& beta, const Real& gamma,
                                           const Real& a, const std::vector<Real>& alpha_grid) {
  const Poly target = build_jl(n, beta, gamma, a);
  return convergence_table(target, alpha_grid, [&](const Real& alpha) {
    const Poly p = build_aj(n, ParamSet{alpha, beta, gamma, a / alpha});
    Poly s = p;
    // alpha^{2n} P(x/alpha): coefficient i picks up alpha^{2n-i}
    for (int i = 0; i <= 2 * n; ++i)
      s.coeffs[static_cast<std::size_t>(i)] = p.coeffs[static_cast<std::size_t>(i)] * int_pow(alpha, 2 * n - i);
    return s;
  });
}

std::vector<LimitRow> limit_convergence_lh(int n, const Real& gamma,
                                           const std::vector<Real>& alpha_grid) {
  const Poly target = build_lh(n, gamma);
  return convergence_table(target, alpha_grid, [&](const Real& alpha) {
    const Poly p = build_aj(n, ParamSet{alpha, alpha, gamma, Real(-1)});
    Poly s = p;
    // alpha^{n} P(x/sqrt(alpha)): coefficient i picks up alpha^{(2n-i)/2}
    const Real root = sqrt(alpha);
    for (int i = 0; i <= 2 * n; ++i)
      s.coeffs[static_cast<std::size_t>(i)] = p.coeffs[static_cast<std::size_t>(i)] * int_pow(root, 2 * n - i);
    return s;
  });
}

}  // namespace mopz
