#include "mopz/angelesco.hpp"

#include "mopz/gamma.hpp"
#include "mopz/zeros.hpp"

#include <algorithm>

namespace mopz {

Poly build_aj(int n, const ParamSet& p) {
  validate(p);
  if (n < 0) throw DomainError("build_aj requires n >= 0");
  Poly out;
  out.family = Family::AngelescoJacobi;
  out.n = n;
  out.params = p;
  if (n == 0) {
    out.coeffs = {Real(1)};
    return out;
  }
  // c_n P_n = sum_{k,j} d_{j,k} (x-1)^{n-k} x^{k+j} (x-a)^{n-j}
  std::vector<std::vector<Real>> pow_x1(n + 1), pow_xa(n + 1);
  for (int m = 0; m <= n; ++m) {
    pow_x1[m] = poly_linear_power(Real(1), m);
    pow_xa[m] = poly_linear_power(p.a, m);
  }
  std::vector<Real> acc(2 * n + 1, Real(0));
  for (int k = 0; k <= n; ++k) {
    const Real bk = gen_binomial(Real(n) + p.alpha, k);
    for (int j = 0; j <= n - k; ++j) {
      const Real d = bk * gen_binomial(Real(n) + p.beta, j) *
                     gen_binomial(Real(n) + p.gamma, n - k - j);
      const std::vector<Real> term = poly_mul(pow_x1[n - k], pow_xa[n - j]);
      const int off = k + j;
      for (std::size_t i = 0; i < term.size(); ++i) acc[off + i] += d * term[i];
    }
  }
  // The accumulated leading coefficient equals c_n = gen_binomial(3n+a+b+g, n)
  // by Vandermonde; dividing by it keeps the polynomial self-consistent and
  // makes monicity exact.
  const Real lead = acc[2 * n];
  out.coeffs.resize(2 * n + 1);
  for (int i = 0; i < 2 * n; ++i) out.coeffs[i] = acc[i] / lead;
  out.coeffs[2 * n] = 1;
  return out;
}

Real aj_constant_term(int n, const ParamSet& p) {
  validate(p);
  if (n < 0) throw DomainError("n must be >= 0");
  if (n == 0) return Real(1);
  return gen_binomial(Real(n) + p.gamma, n) / gen_binomial(Real(3 * n) + p.alpha + p.beta + p.gamma, n) *
         int_pow(p.a, n);
}

namespace {

// integrand x^k q(x) w(x) on one subinterval, written in terms of the exact
// endpoint distances so the singular factors keep full precision
SegmentIntegrand aj_integrand(const Poly& q, const ParamSet& p, int k, Side side) {
  if (side == Side::Negative) {
    // (a, 0): dl = x - a, dr = -x;  w = (1-x)^alpha dl^beta dr^gamma, x^k = (-dr)^k
    return [q, p, k](const Real& x, const Real& dl, const Real& dr) -> Real {
      Real v = pow(dl, p.beta) * pow(dr, p.gamma) * pow(1 - x, p.alpha);
      v *= int_pow(-dr, k);
      return v * eval_poly(q, x);
    };
  }
  // (0, 1): dl = x, dr = 1 - x;  w = dr^alpha (x-a)^beta dl^gamma, x^k = dl^k
  return [q, p, k](const Real& x, const Real& dl, const Real& dr) -> Real {
    Real v = pow(dr, p.alpha) * pow(dl, p.gamma) * pow(x - p.a, p.beta);
    v *= int_pow(dl, k);
    return v * eval_poly(q, x);
  };
}

}  // namespace

Real aj_weighted_moment(const Poly& q, const ParamSet& p, int k, Side side, Real* abs_scale) {
  validate(p);
  if (k < 0) throw DomainError("moment order must be >= 0");
  const Real lo = side == Side::Negative ? p.a : Real(0);
  const Real hi = side == Side::Negative ? Real(0) : Real(1);
  QuadratureOptions opt = default_quadrature_options();
  const SegmentIntegrand f = aj_integrand(q, p, k, side);
  const Real value = integrate_segment(f, lo, hi, opt).value;
  if (abs_scale) {
    // split at q's zeros inside the subinterval; x^k q w has one sign per
    // piece, so the absolute integral is the sum of |piece| values
    const int nz = q.degree() > 0 ? q.n : 0;
    std::vector<Real> cuts;
    if (nz > 0 && q.family != Family::ClassicalJacobi) {
      ZeroBounds zb{p.a, Real(1)};
      const ZeroSet zs = find_zeros(q, nz, nz, zb);
      cuts = side == Side::Negative ? zs.negative : zs.positive;
    }
    QuadratureOptions loose = opt;
    loose.rel_tol = pow2(-40);  // the scale only normalizes; 12 digits is plenty
    Real acc = 0;
    Real a0 = lo;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
      const Real b0 = i < cuts.size() ? cuts[i] : hi;
      acc += abs(integrate_segment(f, a0, b0, loose).value);
      a0 = b0;
    }
    *abs_scale = acc;
  }
  return value;
}

Real check_orthogonality(int n, const ParamSet& p) {
  if (n < 1) throw DomainError("check_orthogonality requires n >= 1");
  const Poly poly = build_aj(n, p);
  Real worst = 0;
  for (Side side : {Side::Negative, Side::Positive}) {
    for (int k = 0; k < n; ++k) {
      Real scale = 0;
      const Real num = aj_weighted_moment(poly, p, k, side, &scale);
      worst = std::max(worst, abs(num) / scale);
    }
  }
  return worst;
}

Real check_raising_aj(int n, const ParamSet& p, const Real& x) {
  validate(p);
  if (n < 1) throw DomainError("check_raising_aj requires n >= 1");
  require_finite(x, "x");
  if (x == p.a || x == 0 || x == 1) throw DomainError("x sits on a weight singularity");
  Real resid;
  {
    // guard digits cover the evaluation conditioning at wide parameter spreads
    ScopedPrecision guard(precision_bits() + 64);
    const ParamSet hp = to_working_precision(p);
    const Real hx = to_working_precision(x);
    const Poly pn = build_aj(n, hp);
    const Poly inner = build_aj(n - 1, ParamSet{hp.alpha + 1, hp.beta + 1, hp.gamma + 1, hp.a});
    const Real q = eval_poly(inner, hx);
    const Real dq = eval_derivative(inner, hx);
    const Real lhs = (2 * n + hp.alpha + hp.beta + hp.gamma + 1) * eval_poly(pn, hx);
    // -(1/w) d/dx[w_+ P] with w_+ / w = (1-x)(x-a)x
    const Real rhs = (hp.alpha + 1) * (hx - hp.a) * hx * q -
                     (hp.beta + 1) * (1 - hx) * hx * q -
                     (hp.gamma + 1) * (1 - hx) * (hx - hp.a) * q -
                     (1 - hx) * (hx - hp.a) * hx * dq;
    const Real denom =
        std::max(std::max(abs(lhs), abs(rhs)), pow2(-2 * static_cast<long>(precision_bits())));
    resid = abs(lhs - rhs) / denom;
  }
  return round_to_session(resid);
}

bool check_rodrigues_integer_params(int n, const ParamSet& p_in) {
  validate(p_in);
  if (n < 0) throw DomainError("n must be >= 0");
  auto as_int = [](const Real& v, const char* what) {
    if (!(v == floor(v)) || v < 0 || v > 64)
      throw DomainError(std::string(what) + " must be an integer in [0, 64] for the Rodrigues check");
    return static_cast<int>(v.convert_to<long>());
  };
  const int ia = as_int(p_in.alpha, "alpha");
  const int ib = as_int(p_in.beta, "beta");
  const int ig = as_int(p_in.gamma, "gamma");
  const Real session_rel = session_tolerance().rel_identity;
  ScopedPrecision guard(precision_bits() + 64);
  const ParamSet p = to_working_precision(p_in);

  // G = (1-x)^(alpha+n) (x-a)^(beta+n) x^(gamma+n)
  std::vector<Real> g = poly_linear_power(Real(1), ia + n);
  if ((ia + n) % 2 != 0)
    for (Real& c : g) c = -c;  // (1-x)^m = (-1)^m (x-1)^m
  g = poly_mul(g, poly_linear_power(p.a, ib + n));
  std::vector<Real> shift(static_cast<std::size_t>(ig + n) + 1, Real(0));
  shift.back() = 1;
  g = poly_mul(g, shift);
  // (-1)^n / n! * d^n/dx^n
  for (int i = 0; i < n; ++i) g = poly_derivative(g);
  Real scale = (n % 2 == 0) ? Real(1) : Real(-1);
  for (int i = 2; i <= n; ++i) scale /= i;
  for (Real& c : g) c *= scale;

  // divide out the bare weight (1-x)^alpha (x-a)^beta x^gamma exactly
  Real coeff_mag = 0;
  for (const Real& c : g) coeff_mag = std::max(coeff_mag, abs(c));
  const Real rem_tol = session_rel * std::max(coeff_mag, Real(1));
  for (int i = 0; i < ig; ++i) {
    if (abs(g.front()) > rem_tol) return false;
    g.erase(g.begin());
  }
  Real rem;
  for (int i = 0; i < ib; ++i) {
    g = poly_deflate(g, p.a, &rem);
    if (abs(rem) > rem_tol) return false;
  }
  for (int i = 0; i < ia; ++i) {
    g = poly_deflate(g, Real(1), &rem);
    if (abs(rem) > rem_tol) return false;
  }
  if (ia % 2 != 0)
    for (Real& c : g) c = -c;

  const Poly pn = build_aj(n, p);
  const Real cn = n == 0 ? Real(1) : gen_binomial(Real(3 * n) + p.alpha + p.beta + p.gamma, n);
  if (g.size() != pn.coeffs.size()) return false;
  const Real tol = session_rel * std::max(Real(1), coeff_mag);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (abs(g[i] - cn * pn.coeffs[i]) > tol) return false;
  }
  return true;
}

}  // namespace mopz
