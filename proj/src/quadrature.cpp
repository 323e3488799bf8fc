#include "mopz/quadrature.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace mopz {

namespace {

// Canonical tanh-sinh node at t > 0 for the reference segment (-1, 1):
//   u = (pi/2) sinh t,  tau = tanh u,
//   near = 1 - tau = 2e/(1+e),  far = 1 + tau = 2/(1+e)   with e = exp(-2u),
//   w = (pi/2) cosh t * 4e/(1+e)^2.
// The mirrored node at -t swaps near/far.
struct TsNode {
  Real near_dist;
  Real far_dist;
  Real weight;
};

// Canonical exp-sinh node for (0, inf): x = exp(u), w = x * (pi/2) cosh t.
struct EsNode {
  Real x;
  Real weight;
};

struct NodeTables {
  // level L holds the nodes new at that level: t = k * 2^-L, k odd (level 0: k = 1, 2, 3, ...)
  std::vector<std::vector<TsNode>> ts_levels;
  std::vector<std::vector<EsNode>> es_pos_levels;  // t > 0 side (x > 1)
  std::vector<std::vector<EsNode>> es_neg_levels;  // t < 0 side (x < 1)
  TsNode ts_center;
  EsNode es_center;
  Real t_max;
};

Real node_t_max() {
  // Endpoint distances go like e^{-2u}; with the worst admissible exponent
  // floor 1/16 the term magnitude is e^{-2u/16}. Reach far enough that even
  // that tail is below 2^-(bits+48).
  const Real bits(static_cast<long>(precision_bits()));
  const Real u_max = (bits + 48) * log(Real(2)) * 8;  // = (bits+48) ln2 / (2 * 1/16)
  return asinh(u_max / (pi_value() / 2));
}

TsNode make_ts_node(const Real& t, const Real& half_pi) {
  const Real u = half_pi * sinh(t);
  const Real e = exp(-2 * u);  // t > 0 so u > 0, e in (0,1)
  const Real denom = 1 + e;
  TsNode n;
  n.near_dist = 2 * e / denom;
  n.far_dist = 2 / denom;
  n.weight = half_pi * cosh(t) * 4 * e / (denom * denom);
  return n;
}

EsNode make_es_node(const Real& t, const Real& half_pi) {
  const Real u = half_pi * sinh(t);
  EsNode n;
  n.x = exp(u);
  n.weight = n.x * half_pi * cosh(t);
  return n;
}

const NodeTables& tables_for_session(int levels_needed) {
  static std::map<unsigned, NodeTables> cache;
  NodeTables& tab = cache[precision_bits()];
  const Real half_pi = pi_value() / 2;
  if (tab.ts_levels.empty()) {
    tab.t_max = node_t_max();
    tab.ts_center = TsNode{Real(1), Real(1), half_pi};  // t = 0: tau = 0, w = pi/2
    tab.es_center = EsNode{Real(1), half_pi};
  }
  while (static_cast<int>(tab.ts_levels.size()) <= levels_needed) {
    const int level = static_cast<int>(tab.ts_levels.size());
    const Real h = pow2(-level);
    std::vector<TsNode> ts;
    std::vector<EsNode> esp, esn;
    const long step = (level == 0) ? 1 : 2;
    for (long k = 1;; k += step) {
      const Real t = Real(k) * h;
      if (t > tab.t_max) break;
      ts.push_back(make_ts_node(t, half_pi));
      esp.push_back(make_es_node(t, half_pi));
      esn.push_back(make_es_node(-t, half_pi));
    }
    tab.ts_levels.push_back(std::move(ts));
    tab.es_pos_levels.push_back(std::move(esp));
    tab.es_neg_levels.push_back(std::move(esn));
  }
  return tab;
}

[[noreturn]] void report_non_convergence(const char* kind, const QuadratureResult& last,
                                         const Real& rel_tol) {
  std::ostringstream os;
  os << kind << " quadrature did not converge: levels=" << last.levels
     << " evaluations=" << last.evaluations << " last_delta=" << last.abs_error.str(6)
     << " l1=" << last.l1.str(6) << " target=" << rel_tol.str(6);
  throw NumericError(os.str());
}

}  // namespace

QuadratureOptions default_quadrature_options() {
  QuadratureOptions opt;
  opt.rel_tol = session_tolerance().rel_identity / 256;
  return opt;
}

QuadratureResult integrate_segment(const SegmentIntegrand& f, const Real& lo, const Real& hi,
                                   const QuadratureOptions& opt) {
  if (!(lo < hi)) throw DomainError("integration requires lo < hi");
  const Real s = (hi - lo) / 2;
  const NodeTables& tab = tables_for_session(opt.max_levels);
  const Real trunc_floor = opt.rel_tol * pow2(-16);

  QuadratureResult res;
  Real I_prev = 0, L1_prev = 0;
  for (int level = 0; level <= opt.max_levels; ++level) {
    const Real h = pow2(-level);
    Real sum = 0, asum = 0;
    if (level == 0) {
      const Real x = lo + s * tab.ts_center.near_dist;  // midpoint
      const Real term = s * tab.ts_center.weight * f(x, s, s);
      sum += term;
      asum += abs(term);
      ++res.evaluations;
    }
    const auto& nodes = tab.ts_levels[static_cast<std::size_t>(level)];
    for (int side = 0; side < 2; ++side) {
      int consecutive_small = 0;
      for (const TsNode& nd : nodes) {
        Real dl, dh, x;
        if (side == 0) {  // t > 0: near hi
          dh = s * nd.near_dist;
          dl = s * nd.far_dist;
          x = hi - dh;
        } else {  // mirrored: near lo
          dl = s * nd.near_dist;
          dh = s * nd.far_dist;
          x = lo + dl;
        }
        const Real term = s * nd.weight * f(x, dl, dh);
        sum += term;
        asum += abs(term);
        ++res.evaluations;
        if (abs(term) <= trunc_floor * (asum + L1_prev)) {
          if (++consecutive_small >= 3) break;
        } else {
          consecutive_small = 0;
        }
      }
    }
    if (level == 0) {
      res.value = h * sum;
      res.l1 = h * asum;
    } else {
      res.value = I_prev / 2 + h * sum;
      res.l1 = L1_prev / 2 + h * asum;
    }
    res.levels = level;
    if (level >= 4) {
      res.abs_error = abs(res.value - I_prev);
      const Real scale = std::max(res.l1, pow2(-static_cast<long>(precision_bits())));
      if (res.abs_error <= opt.rel_tol * scale) return res;
    }
    I_prev = res.value;
    L1_prev = res.l1;
  }
  report_non_convergence("tanh-sinh", res, opt.rel_tol);
}

QuadratureResult integrate_half_line(const HalfLineIntegrand& f, const QuadratureOptions& opt) {
  const NodeTables& tab = tables_for_session(opt.max_levels);
  const Real trunc_floor = opt.rel_tol * pow2(-16);

  QuadratureResult res;
  Real I_prev = 0, L1_prev = 0;
  for (int level = 0; level <= opt.max_levels; ++level) {
    const Real h = pow2(-level);
    Real sum = 0, asum = 0;
    if (level == 0) {
      const Real term = tab.es_center.weight * f(tab.es_center.x);
      sum += term;
      asum += abs(term);
      ++res.evaluations;
    }
    for (const auto* side :
         {&tab.es_pos_levels[static_cast<std::size_t>(level)],
          &tab.es_neg_levels[static_cast<std::size_t>(level)]}) {
      int consecutive_small = 0;
      for (const EsNode& nd : *side) {
        const Real term = nd.weight * f(nd.x);
        sum += term;
        asum += abs(term);
        ++res.evaluations;
        if (abs(term) <= trunc_floor * (asum + L1_prev)) {
          if (++consecutive_small >= 3) break;
        } else {
          consecutive_small = 0;
        }
      }
    }
    if (level == 0) {
      res.value = h * sum;
      res.l1 = h * asum;
    } else {
      res.value = I_prev / 2 + h * sum;
      res.l1 = L1_prev / 2 + h * asum;
    }
    res.levels = level;
    if (level >= 4) {
      res.abs_error = abs(res.value - I_prev);
      const Real scale = std::max(res.l1, pow2(-static_cast<long>(precision_bits())));
      if (res.abs_error <= opt.rel_tol * scale) return res;
    }
    I_prev = res.value;
    L1_prev = res.l1;
  }
  report_non_convergence("exp-sinh", res, opt.rel_tol);
}

}  // namespace mopz
