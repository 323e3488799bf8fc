#include "mopz/zeros.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mopz {

namespace {

int sign_of(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct Bracket {
  Real lo, hi;
  Real f_lo, f_hi;
};

// Seed grid: uniform nodes plus geometric clusters toward both endpoints.
// Zeros of these families pile up against the endpoints for large gamma, so
// the geometric tail buys dyadic depth ~100 near the ends for a few dozen
// evaluations.
std::vector<Real> seed_grid(const Real& lo, const Real& hi, int expected) {
  const Real span = hi - lo;
  std::set<Real> pts;
  const int uniform = std::max(16, 6 * expected);
  for (int i = 0; i <= uniform; ++i) pts.insert(lo + span * i / uniform);
  const int geo_depth = std::min<int>(110, static_cast<int>(precision_bits()) / 2);
  for (int i = 2; i <= geo_depth; ++i) {
    const Real d = span * pow2(-i);
    pts.insert(lo + d);
    pts.insert(hi - d);
  }
  return {pts.begin(), pts.end()};
}

Real polish_bracket(const std::vector<Real>& c, const std::vector<Real>& dc, Bracket b,
                    Real* residual_out) {
  // Bisect until Newton's basin is guaranteed, then let Newton finish.
  const long bits = static_cast<long>(precision_bits());
  const Real done_width = (abs(b.lo) + abs(b.hi) + 1) * pow2(-bits + 2);
  for (int i = 0; i < 60 && b.hi - b.lo > done_width; ++i) {
    const Real mid = (b.lo + b.hi) / 2;
    const Real fm = poly_eval(c, mid);
    if (fm == 0) {
      if (residual_out) *residual_out = 0;
      return mid;
    }
    if (sign_of(fm) == sign_of(b.f_lo)) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  Real x = (b.lo + b.hi) / 2;
  const Real step_tol = (abs(x) + 1) * pow2(-bits + 4);
  for (int it = 0; it < 80; ++it) {
    const Real fx = poly_eval(c, x);
    if (fx == 0) break;
    const Real dfx = poly_eval(dc, x);
    if (dfx == 0) break;  // cannot happen for simple zeros once bracketed tightly
    const Real step = fx / dfx;
    Real next = x - step;
    // project into the closed bracket; a hit on an endpoint is fine (the
    // refined root may sit there after an earlier bracket update)
    if (!(next >= b.lo && next <= b.hi)) next = (b.lo + b.hi) / 2;
    const Real fn = poly_eval(c, next);
    if (fn == 0) {
      x = next;
      break;
    }
    if (sign_of(fn) == sign_of(b.f_lo)) {
      b.lo = next;
      b.f_lo = fn;
    } else {
      b.hi = next;
      b.f_hi = fn;
    }
    const bool converged = abs(next - x) <= step_tol;
    x = next;
    if (converged) break;
  }
  if (residual_out) {
    const Real fx = poly_eval(c, x);
    const Real dfx = poly_eval(dc, x);
    *residual_out = dfx == 0 ? Real(0) : abs(fx / dfx);
  }
  return x;
}

std::vector<Real> isolate_on(const std::vector<Real>& c, Real lo, Real hi, int expected,
                             Real* worst_residual) {
  if (expected == 0) return {};
  if (!(lo < hi)) throw DomainError("root isolation requires lo < hi");
  const std::vector<Real> dc = poly_derivative(c);

  std::vector<Real> xs = seed_grid(lo, hi, expected);
  std::vector<Real> fs(xs.size());
  std::size_t evals = 0;
  // interior nodes that hit a zero exactly are nudged so the sign change
  // stays visible to the bracketing pass
  const Real nudge = (hi - lo) * pow2(-static_cast<long>(precision_bits()) / 2);
  auto eval_node = [&](Real& x) {
    Real v = poly_eval(c, x);
    for (int t = 0; v == 0 && x > lo && x < hi && t < 3; ++t) {
      x += nudge;
      v = poly_eval(c, x);
    }
    return v;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = eval_node(xs[i]);
  evals += xs.size();

  const std::size_t eval_budget = std::size_t(1) << 20;
  for (int round = 0; round <= 40; ++round) {
    std::vector<Bracket> brackets;
    int changes = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const int s0 = sign_of(fs[i]), s1 = sign_of(fs[i + 1]);
      if (s0 == 0 || s1 == 0) continue;  // grid node on a zero: midpoints resolve it
      if (s0 != s1) {
        ++changes;
        brackets.push_back({xs[i], xs[i + 1], fs[i], fs[i + 1]});
      }
    }
    if (changes == expected) {
      std::vector<Real> roots;
      roots.reserve(brackets.size());
      Real worst = 0;
      for (const Bracket& b : brackets) {
        Real r;
        roots.push_back(polish_bracket(c, dc, b, &r));
        worst = std::max(worst, r);
      }
      if (worst_residual) *worst_residual = std::max(*worst_residual, worst);
      return roots;
    }
    if (changes > expected) {
      std::ostringstream os;
      os << "root isolation found " << changes << " sign changes but expected " << expected
         << " on (" << lo.str(8) << ", " << hi.str(8) << ")";
      throw NumericError(os.str());
    }
    // refine: insert midpoints everywhere (sign-change cells may hide triples)
    if (2 * xs.size() > eval_budget || evals + xs.size() > eval_budget) {
      std::ostringstream os;
      os << "root isolation failed: " << changes << " of " << expected
         << " zeros separated after " << evals << " evaluations on (" << lo.str(8) << ", "
         << hi.str(8) << "); raise precision or check the expected counts";
      throw NumericError(os.str());
    }
    std::vector<Real> nxs;
    std::vector<Real> nfs;
    nxs.reserve(xs.size() * 2 - 1);
    nfs.reserve(xs.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      Real mid = (xs[i] + xs[i + 1]) / 2;
      nxs.push_back(xs[i]);
      nfs.push_back(fs[i]);
      const Real fm = eval_node(mid);
      nxs.push_back(mid);
      nfs.push_back(fm);
      ++evals;
    }
    nxs.push_back(xs.back());
    nfs.push_back(fs.back());
    xs = std::move(nxs);
    fs = std::move(nfs);
  }
  throw NumericError("root isolation failed: grid depth 40 exhausted");
}

void enforce_separation(const std::vector<Real>& roots) {
  const Real guard = session_tolerance().zero_cluster;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Real gap = roots[i + 1] - roots[i];
    if (gap <= guard * (abs(roots[i]) + abs(roots[i + 1]) + 1)) {
      throw NumericError("root isolation failed: near-collision at " + roots[i].str(12) +
                         " (separation " + gap.str(4) + " below the zero_cluster guard)");
    }
  }
}

}  // namespace

ZeroSet find_zeros(const Poly& p, int count_neg, int count_pos, const ZeroBounds& bounds) {
  if (count_neg < 0 || count_pos < 0) throw DomainError("expected zero counts must be >= 0");
  ZeroSet out;
  out.refined_to = 0;
  if (count_neg == 0 && count_pos == 0) return out;
  const Real cauchy = cauchy_root_bound(p.coeffs);
  const Real lo = bounds.lo ? *bounds.lo : -cauchy;
  const Real hi = bounds.hi ? *bounds.hi : cauchy;
  if (count_neg > 0) out.negative = isolate_on(p.coeffs, lo, Real(0), count_neg, &out.refined_to);
  if (count_pos > 0) out.positive = isolate_on(p.coeffs, Real(0), hi, count_pos, &out.refined_to);
  enforce_separation(out.negative);
  enforce_separation(out.positive);
  const Real span = hi - lo;
  if (!(out.refined_to < session_tolerance().zero_cluster * span)) {
    throw NumericError("zero refinement residual " + out.refined_to.str(6) +
                       " exceeds zero_cluster * interval");
  }
  return out;
}

std::vector<Real> find_zeros_interval(const Poly& p, int count, const Real& lo, const Real& hi) {
  if (count < 0) throw DomainError("expected zero count must be >= 0");
  if (count == 0) return {};
  Real resid = 0;
  std::vector<Real> roots = isolate_on(p.coeffs, lo, hi, count, &resid);
  enforce_separation(roots);
  return roots;
}

InterlacingVerdict check_interlacing(const std::vector<Real>& q_zeros,
                                     const std::vector<Real>& p_zeros,
                                     const OpenInterval& interval) {
  auto restrict_sorted = [&](const std::vector<Real>& zs, const char* which) {
    std::vector<Real> out;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (i > 0 && !(zs[i - 1] < zs[i]))
        throw DomainError(std::string(which) + " zeros must be strictly ascending");
      if (interval.contains(zs[i])) out.push_back(zs[i]);
    }
    return out;
  };
  const std::vector<Real> p = restrict_sorted(p_zeros, "p");
  const std::vector<Real> q = restrict_sorted(q_zeros, "q");

  InterlacingVerdict v;
  const int k = static_cast<int>(p.size());
  const int j = static_cast<int>(q.size());
  v.pattern = (j == k) ? InterlacingPattern::SameCount : InterlacingPattern::CountMinusOne;
  if (j != k && j != k - 1 && j != k + 1) {
    v.holds = false;
    v.first_violation = {{0, {Real(k), Real(j)}}};
    return v;
  }
  // merged chain: equal counts open with p; otherwise the longer list opens.
  const bool p_first = (j == k) || (j == k - 1);
  const std::vector<Real>& first = p_first ? p : q;
  const std::vector<Real>& second = p_first ? q : p;
  Real prev;
  bool have_prev = false;
  for (std::size_t i = 0; i < first.size() || i < second.size(); ++i) {
    for (const std::vector<Real>* lst : {&first, &second}) {
      if (i >= lst->size()) continue;
      const Real& cur = (*lst)[i];
      if (have_prev && !(prev < cur)) {
        v.holds = false;
        v.first_violation = {{static_cast<int>(2 * i + (lst == &second ? 1 : 0)), {prev, cur}}};
        return v;
      }
      prev = cur;
      have_prev = true;
    }
  }
  v.holds = true;
  return v;
}

Real f_function(const Real& x, const ParamSet& p, const ZeroSet& inner_zeros) {
  validate(p);
  require_finite(x, "x");
  if (x == p.a || x == 0 || x == 1) throw DomainError("f_function pole at x");
  Real acc = 0;
  for (const Real& y : inner_zeros.all()) {
    if (x == y) throw DomainError("f_function pole at an inner zero");
    acc += 1 / (x - y);
  }
  acc += (p.beta + 1) / (x - p.a);
  acc += (p.gamma + 1) / x;
  acc -= (p.alpha + 1) / (1 - x);
  return acc;
}

Real f_pole_scale(const Real& x, const ParamSet& p, const ZeroSet& inner_zeros) {
  Real terms = 0, fprime = 0;
  for (const Real& y : inner_zeros.all()) {
    const Real d = x - y;
    terms += 1 / abs(d);
    fprime += 1 / (d * d);
  }
  terms += abs(p.beta + 1) / abs(x - p.a) + abs(p.gamma + 1) / abs(x) + abs(p.alpha + 1) / abs(1 - x);
  fprime += (p.beta + 1) / ((x - p.a) * (x - p.a)) + (p.gamma + 1) / (x * x) +
            (p.alpha + 1) / ((1 - x) * (1 - x));
  return terms + fprime * std::max(Real(1), abs(x));
}

}  // namespace mopz
