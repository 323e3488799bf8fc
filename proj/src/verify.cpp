#include "mopz/verify.hpp"

#include "mopz/angelesco.hpp"
#include "mopz/electro.hpp"
#include "mopz/families.hpp"
#include "mopz/gamma.hpp"
#include "mopz/sampling.hpp"
#include "mopz/zeros.hpp"

#include <algorithm>
#include <sstream>

namespace mopz {

namespace {

struct Tracker {
  PropertyResult res;
  Real worst = -1;

  explicit Tracker(std::string name) { res.name = std::move(name); }

  void observe(const Real& metric, const Real& bound, const std::string& which) {
    ++res.cases;
    if (metric > worst) {
      worst = metric;
      res.worst_metric = metric.str(6);
      res.worst_case = which;
    }
    if (!(metric < bound)) res.pass = false;
  }

  void check(bool ok, const std::string& which) {
    ++res.cases;
    if (!ok) {
      res.pass = false;
      if (res.worst_case.empty()) res.worst_case = which;
      res.worst_metric = "violation";
    }
  }
};

std::string describe(int n, const ParamSet& p, const std::string& extra = "") {
  std::ostringstream os;
  os << "n=" << n << " alpha=" << p.alpha.str(12) << " beta=" << p.beta.str(12)
     << " gamma=" << p.gamma.str(12) << " a=" << p.a.str(12);
  if (!extra.empty()) os << ' ' << extra;
  return os.str();
}

std::string describe(int n, const JacobiLaguerreParams& p, const std::string& extra = "") {
  std::ostringstream os;
  os << "n=" << n << " beta=" << p.beta.str(12) << " gamma=" << p.gamma.str(12)
     << " a=" << p.a.str(12);
  if (!extra.empty()) os << ' ' << extra;
  return os.str();
}

SuiteReport finish(std::string name, std::vector<Tracker> trackers) {
  SuiteReport rep;
  rep.suite = std::move(name);
  for (Tracker& t : trackers) {
    rep.pass = rep.pass && t.res.pass;
    rep.properties.push_back(std::move(t.res));
  }
  return rep;
}

ParamSet raised(const ParamSet& p) {
  return ParamSet{p.alpha + 1, p.beta + 1, p.gamma + 1, p.a};
}

ZeroSet aj_zeros(int n, const ParamSet& p) {
  return find_zeros(build_aj(n, p), n, n, ZeroBounds{p.a, Real(1)});
}

ZeroSet jl_zeros(int n, const JacobiLaguerreParams& p) {
  return find_zeros(build_jl(n, p.beta, p.gamma, p.a), n, n, ZeroBounds{p.a, std::nullopt});
}

ZeroSet lh_zeros(int n, const Real& gamma) {
  return find_zeros(build_lh(n, gamma), n, n, ZeroBounds{std::nullopt, std::nullopt});
}

std::vector<Real> with_origin(const ZeroSet& zs) {
  std::vector<Real> out = zs.negative;
  out.push_back(Real(0));
  out.insert(out.end(), zs.positive.begin(), zs.positive.end());
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "structure", "interlacing", "raising", "orthogonality", "means", "electro", "limits"};
  return names;
}

SuiteReport run_structure_suite(const VerifyOptions& opts, const StructureCoeffsProvider& provider) {
  ParamSampler rng(opts.seed);
  const Real tol = session_tolerance().rel_identity;
  Tracker alpha_t("thm3-alpha-shift"), beta_t("thm3-beta-shift"), gamma_t("thm3-gamma-shift");
  Tracker coeff_t("structure-coeffs-partition");
  Tracker jl_beta_t("jl-structure-beta-shift"), jl_gamma_t("jl-structure-gamma-shift");
  Tracker lh_t("lh-structure-gamma-shift");

  const StructureCoeffsProvider coeffs =
      provider ? provider
               : StructureCoeffsProvider([](int n, const ParamSet& p) { return structure_coeffs(n, p); });

  for (long t = 0; t < opts.trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(1, opts.n_max);
    const Real x = rng.uniform(-0.99, 0.99) * (t % 2 == 0 ? Real(1) : -p.a / 2);
    const std::string which = describe(n, p, "x=" + x.str(12));
    const StructureCoeffs sc = coeffs(n, p);
    alpha_t.observe(structure_identity_residual(ShiftKind::Alpha, n, p, x, sc), tol, which);
    beta_t.observe(structure_identity_residual(ShiftKind::Beta, n, p, x, sc), tol, which);
    gamma_t.observe(structure_identity_residual(ShiftKind::Gamma, n, p, x, sc), tol, which);

    const StructureCoeffs real_sc = structure_coeffs(n, p);
    const Real s = p.alpha + p.beta + p.gamma;
    coeff_t.check(real_sc.A + real_sc.B == 1 && real_sc.A > 0 && real_sc.B > 0 &&
                      abs(real_sc.B - Real(n) / (3 * n + s + 1)) < tol,
                  which);
  }

  const long jl_trials = std::max<long>(6, opts.trials / 8);
  for (long t = 0; t < jl_trials; ++t) {
    const JacobiLaguerreParams p = rng.jl();
    const int n = rng.uniform_int(1, std::min(opts.n_max, 4));
    const Real x = rng.uniform(-2, 4);
    const std::string which = describe(n, p, "x=" + x.str(12));
    jl_beta_t.observe(structure_identity_jl(JlShift::Beta, n, p.beta, p.gamma, p.a, x), tol, which);
    jl_gamma_t.observe(structure_identity_jl(JlShift::Gamma, n, p.beta, p.gamma, p.a, x), tol, which);
  }
  const long lh_trials = std::max<long>(10, opts.trials / 4);
  for (long t = 0; t < lh_trials; ++t) {
    const LaguerreHermiteParams p = rng.lh();
    const int n = rng.uniform_int(1, std::min(opts.n_max, 6));
    const Real x = rng.uniform(-3, 3);
    std::ostringstream os;
    os << "n=" << n << " gamma=" << p.gamma.str(12) << " x=" << x.str(12);
    lh_t.observe(structure_identity_lh(n, p.gamma, x), tol, os.str());
  }
  return finish("structure",
                {alpha_t, beta_t, gamma_t, coeff_t, jl_beta_t, jl_gamma_t, lh_t});
}

SuiteReport run_interlacing_suite(const VerifyOptions& opts) {
  ParamSampler rng(opts.seed);
  const Real cluster = session_tolerance().zero_cluster;
  Tracker thmC("thmC-consecutive-interlacing");
  Tracker t1i("thm1-i-alpha-chain"), t1ii("thm1-ii-beta-chain"), t1iii("thm1-iii-gamma-chains");
  Tracker sign_t("sign-laws");
  Tracker t51("thm5-1-jl-beta-chain"), t52("thm5-2-jl-gamma-chains"), t53("thm5-3-lh-chains");
  Tracker thmB("thmB-classical-jacobi");
  Tracker remark2("remark2-no-common-zeros");

  for (long t = 0; t < opts.trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(2, std::max(2, opts.n_max));
    const std::string which = describe(n, p);

    const ZeroSet zb = aj_zeros(n, p);                      // P_n^{(a,b,g)}
    const ZeroSet zin = aj_zeros(n - 1, raised(p));         // P_{n-1}^{(a+1,b+1,g+1)}
    const OpenInterval neg{p.a, Real(0)}, pos{Real(0), Real(1)}, full{p.a, Real(1)};

    // Theorem C: P_n ≺ P_{n-1}^{(+1)} per subinterval
    thmC.check(check_interlacing(zin.negative, zb.negative, neg).holds &&
                   check_interlacing(zin.positive, zb.positive, pos).holds,
               which);

    // Theorem 1 (i): x(x-a) P_{n-1}^{(+1)} ≺ P_n^{(alpha+1)} ≺ P_n
    ParamSet pa = p;
    pa.alpha += 1;
    const ZeroSet za = aj_zeros(n, pa);
    const std::vector<Real> aug0 = with_origin(zin);  // adds the root at 0
    t1i.check(check_interlacing(za.all(), aug0, full).holds &&
                  check_interlacing(zb.all(), za.all(), full).holds,
              which);

    // Theorem 1 (ii): P_n ≺ P_n^{(beta+1)} ≺ x(x-1) P_{n-1}^{(+1)} (1 is not interior)
    ParamSet pb = p;
    pb.beta += 1;
    const ZeroSet zbb = aj_zeros(n, pb);
    t1ii.check(check_interlacing(zbb.all(), zb.all(), full).holds &&
                   check_interlacing(aug0, zbb.all(), full).holds,
               which);

    // Theorem 1 (iii): one-sided gamma chains
    ParamSet pg = p;
    pg.gamma += 1;
    const ZeroSet zg = aj_zeros(n, pg);
    const bool iii_neg = check_interlacing(zb.negative, zg.negative, neg).holds &&
                         check_interlacing(zin.negative, zb.negative, neg).holds;
    const bool iii_pos = check_interlacing(zg.positive, zb.positive, pos).holds &&
                         check_interlacing(zin.positive, zg.positive, pos).holds;
    t1iii.check(iii_neg && iii_pos, which);

    // Sign laws at a and the alternation at interlaced points
    const Poly pn = build_aj(n, p);
    const Poly pin = build_aj(n - 1, raised(p));
    bool signs_ok = eval_poly(pn, p.a) > 0 && eval_poly(pin, p.a) > 0;
    const int sign_p0 = n % 2 == 0 ? 1 : -1;  // sign of P_n(0) = sign(a^n)
    signs_ok = signs_ok && (sign_p0 * eval_poly(pn, Real(0)) > 0);
    for (int j = 1; j <= n - 1 && signs_ok; ++j) {
      const Real v_in = eval_poly(pin, zb.negative[static_cast<std::size_t>(j - 1)]);
      const Real v_out = eval_poly(pn, zin.negative[static_cast<std::size_t>(j - 1)]);
      const int want = (j % 2 == 1) ? 1 : -1;  // (-1)^(j+1)
      signs_ok = (want * v_in > 0) && (want * v_out < 0);
    }
    sign_t.check(signs_ok, which);
  }

  const long jl_trials = std::max<long>(6, opts.trials / 8);
  for (long t = 0; t < jl_trials; ++t) {
    const JacobiLaguerreParams p = rng.jl();
    const int n = rng.uniform_int(2, std::min(opts.n_max, 5));
    const std::string which = describe(n, p);
    const ZeroSet zb = jl_zeros(n, p);
    const ZeroSet zb1 = jl_zeros(n, JacobiLaguerreParams{p.beta + 1, p.gamma, p.a});
    const ZeroSet zg1 = jl_zeros(n, JacobiLaguerreParams{p.beta, p.gamma + 1, p.a});
    const ZeroSet zin = jl_zeros(n - 1, JacobiLaguerreParams{p.beta + 1, p.gamma + 1, p.a});
    const OpenInterval neg{p.a, Real(0)}, pos{Real(0), std::nullopt}, full{p.a, std::nullopt};

    t51.check(check_interlacing(zb1.all(), zb.all(), full).holds &&
                  check_interlacing(with_origin(zin), zb1.all(), full).holds,
              which);
    const bool g_neg = check_interlacing(zb.negative, zg1.negative, neg).holds &&
                       check_interlacing(zin.negative, zb.negative, neg).holds;
    const bool g_pos = check_interlacing(zg1.positive, zb.positive, pos).holds &&
                       check_interlacing(zin.positive, zg1.positive, pos).holds;
    t52.check(g_neg && g_pos, which);

    Real min_gap = -1;
    for (const Real& u : zb.all())
      for (const Real& v : zin.all()) {
        const Real d = abs(u - v);
        if (min_gap < 0 || d < min_gap) min_gap = d;
      }
    remark2.check(min_gap > cluster, which + " min_gap=" + min_gap.str(6));
  }

  const long lh_trials = std::max<long>(8, opts.trials / 5);
  for (long t = 0; t < lh_trials; ++t) {
    const Real gamma = rng.uniform(-0.9, 5);
    const int n = rng.uniform_int(2, std::min(opts.n_max, 6));
    std::ostringstream os;
    os << "n=" << n << " gamma=" << gamma.str(12);
    const ZeroSet zb = lh_zeros(n, gamma);
    const ZeroSet zg1 = lh_zeros(n, gamma + 1);
    const ZeroSet zin = lh_zeros(n - 1, gamma + 1);
    const OpenInterval neg{std::nullopt, Real(0)}, pos{Real(0), std::nullopt};
    const bool h_neg = check_interlacing(zb.negative, zg1.negative, neg).holds &&
                       check_interlacing(zin.negative, zb.negative, neg).holds;
    const bool h_pos = check_interlacing(zg1.positive, zb.positive, pos).holds &&
                       check_interlacing(zin.positive, zg1.positive, pos).holds;
    t53.check(h_neg && h_pos, os.str());

    Real min_gap = -1;
    for (const Real& u : zb.all())
      for (const Real& v : zin.all()) {
        const Real d = abs(u - v);
        if (min_gap < 0 || d < min_gap) min_gap = d;
      }
    remark2.check(min_gap > cluster, os.str() + " min_gap=" + min_gap.str(6));
  }

  const long b_trials = std::max<long>(8, opts.trials / 5);
  for (long t = 0; t < b_trials; ++t) {
    const ClassicalJacobiParams p = rng.jacobi();
    const int n = rng.uniform_int(1, opts.n_max);
    for (const double td : {0.5, 1.0, 1.9}) {
      const Real tt(td);
      std::ostringstream os;
      os << "n=" << n << " alpha=" << p.alpha.str(12) << " beta=" << p.beta.str(12) << " t=" << td;
      const auto z0 = find_zeros_interval(build_classical_jacobi(n, p.alpha, p.beta), n, Real(-1), Real(1));
      const auto za = find_zeros_interval(build_classical_jacobi(n, p.alpha + tt, p.beta), n, Real(-1), Real(1));
      const auto zbeta = find_zeros_interval(build_classical_jacobi(n, p.alpha, p.beta + tt), n, Real(-1), Real(1));
      const OpenInterval full{Real(-1), Real(1)};
      thmB.check(check_interlacing(z0, za, full).holds && check_interlacing(zbeta, z0, full).holds,
                 os.str());
    }
  }

  return finish("interlacing", {thmC, t1i, t1ii, t1iii, sign_t, t51, t52, t53, thmB, remark2});
}

SuiteReport run_raising_suite(const VerifyOptions& opts) {
  ParamSampler rng(opts.seed);
  const Real tol = session_tolerance().rel_identity;
  Tracker aj_t("aj-raising"), jl_t("jl-raising"), lh_t("lh-raising"), rod_t("rodrigues-integer-params");

  for (long t = 0; t < opts.trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(1, opts.n_max);
    Real x = rng.uniform(0.01, 0.99);
    if (t % 2 == 0) x = p.a * x;  // alternate between the two subintervals
    aj_t.observe(check_raising_aj(n, p, x), tol, describe(n, p, "x=" + x.str(12)));
  }
  const long jl_trials = std::max<long>(6, opts.trials / 8);
  for (long t = 0; t < jl_trials; ++t) {
    const JacobiLaguerreParams p = rng.jl();
    const int n = rng.uniform_int(1, std::min(opts.n_max, 4));
    Real x = rng.uniform(0.05, 3.0);
    if (t % 2 == 0) x = p.a * rng.uniform(0.05, 0.95);
    jl_t.observe(check_raising_jl(n, p.beta, p.gamma, p.a, x), tol,
                 describe(n, p, "x=" + x.str(12)));
  }
  const long lh_trials = std::max<long>(10, opts.trials / 4);
  for (long t = 0; t < lh_trials; ++t) {
    const Real gamma = rng.uniform(-0.9, 5);
    const int n = rng.uniform_int(1, std::min(opts.n_max, 6));
    const Real x = (t % 2 == 0 ? 1 : -1) * rng.uniform(0.05, 2.5);
    std::ostringstream os;
    os << "n=" << n << " gamma=" << gamma.str(12) << " x=" << x.str(12);
    lh_t.observe(check_raising_lh(n, gamma, x), tol, os.str());
  }
  const long rod_trials = std::max<long>(8, opts.trials / 5);
  for (long t = 0; t < rod_trials; ++t) {
    ParamSet p = rng.aj();
    p.alpha = rng.uniform_int(0, 3);
    p.beta = rng.uniform_int(0, 3);
    p.gamma = rng.uniform_int(0, 3);
    const int n = rng.uniform_int(0, std::min(opts.n_max, 5));
    rod_t.check(check_rodrigues_integer_params(n, p), describe(n, p));
  }
  return finish("raising", {aj_t, jl_t, lh_t, rod_t});
}

SuiteReport run_orthogonality_suite(const VerifyOptions& opts) {
  ParamSampler rng(opts.seed);
  const Real tol = session_tolerance().rel_identity;
  Tracker aj_t("aj-orthogonality"), jl_t("jl-orthogonality"), lh_t("lh-orthogonality");
  Tracker rec_t("jl-moment-recurrence-vs-quadrature");

  for (long t = 0; t < opts.trials; ++t) {
    ParamSet p = rng.aj();
    if (t % 3 == 0) p.gamma = rng.uniform(-0.9, 0.0);  // force singular cases in
    const int n = 1 + static_cast<int>(t % std::min(opts.n_max, 6));
    aj_t.observe(check_orthogonality(n, p), tol, describe(n, p));
  }
  const long jl_trials = std::max<long>(5, opts.trials / 10);
  for (long t = 0; t < jl_trials; ++t) {
    const JacobiLaguerreParams p = rng.jl();
    const int n = 1 + static_cast<int>(t % std::min(opts.n_max, 5));
    jl_t.observe(check_orthogonality_jl(n, p), tol, describe(n, p));
  }
  const long lh_trials = std::max<long>(5, opts.trials / 10);
  for (long t = 0; t < lh_trials; ++t) {
    const LaguerreHermiteParams p = rng.lh();
    const int n = 1 + static_cast<int>(t % std::min(opts.n_max, 5));
    std::ostringstream os;
    os << "n=" << n << " gamma=" << p.gamma.str(12);
    lh_t.observe(check_orthogonality_lh(n, p), tol, os.str());
  }
  // hard gate: the integration-by-parts recurrence must reproduce direct
  // quadrature on both intervals for k <= 10
  const long rec_trials = std::max<long>(3, opts.trials / 20);
  for (long t = 0; t < rec_trials; ++t) {
    const JacobiLaguerreParams p = rng.jl();
    for (MomentInterval which : {MomentInterval::NegativeSegment, MomentInterval::PositiveHalfLine}) {
      const MomentTable tab = jl_moment_table(p, 10, which);
      for (int k = 2; k <= 10; ++k) {
        const Real direct = jl_moment_by_quadrature(p, k, which);
        const Real rel = abs(tab.m[static_cast<std::size_t>(k)] - direct) / std::max(abs(direct), Real(1));
        rec_t.observe(rel, tol * 256, describe(0, p, "k=" + std::to_string(k)));
      }
    }
  }
  return finish("orthogonality", {aj_t, jl_t, lh_t, rec_t});
}

SuiteReport run_means_suite(const VerifyOptions& opts) {
  ParamSampler rng(opts.seed);
  const Real tol = session_tolerance().rel_identity;
  Tracker am_t("arithmetic-mean-law"), amd_t("arithmetic-mean-gamma-derivative");
  Tracker gm_t("geometric-mean-law"), gmd_t("geo-mean-log-gamma-derivative");
  Tracker cor1_t("corollary1-zero-approach"), ff_t("f-function-vanishing");
  Tracker lem4_t("lemma4-endpoint-identities");
  Tracker thmD_t("thmD-alpha-beta-signs"), thm4_t("thm4-endpoint-monotonicity");
  Tracker thm2_t("thm2-gamma-signs-large"), bounds_t("section5-bounds-large-gamma");

  const Real fd_h("1e-8"), fd_tol("1e-6");
  for (long t = 0; t < opts.trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(1, opts.n_max);
    const std::string which = describe(n, p);

    const ZeroSet zs = aj_zeros(n, p);
    Real mean = 0;
    for (const Real& z : zs.all()) mean += z;
    mean /= 2 * n;
    const Real am = arithmetic_mean(n, p);
    am_t.observe(abs(am - mean) / std::max(Real(1), abs(am)), tol, which);

    ParamSet pu = p, pd = p;
    pu.gamma += fd_h;
    pd.gamma -= fd_h;
    const Real fd = (arithmetic_mean(n, pu) - arithmetic_mean(n, pd)) / (2 * fd_h);
    const Real amd = arithmetic_mean_gamma_derivative(n, p);
    amd_t.observe(abs(fd - amd) / std::max(abs(amd), Real("1e-9")), fd_tol, which);

    const Real gm = geometric_mean_at_zero(n, p);
    gm_t.observe(abs(gm - abs(eval_poly(build_aj(n, p), Real(0)))) / gm, tol, which);

    const Real gfd = (log(geometric_mean_at_zero(n, pu)) - log(geometric_mean_at_zero(n, pd))) / (2 * fd_h);
    const Real gmd = geo_mean_log_gamma_derivative(n, p);
    gmd_t.observe(abs(gfd - gmd) / std::max(abs(gmd), Real("1e-9")), fd_tol, which);
    gmd_t.check(gmd > 0, which);
  }

  // Corollary 1 on the pinned gamma grid
  {
    const ParamSet base{Real(0), Real(0), Real(0), Real(-1)};
    const int n = 2;
    Real prev_dist;
    bool first = true, decreasing = true;
    Real final_dist = 0, final_gap = 0;
    for (const double g : {1e2, 1e3, 1e4}) {
      ParamSet p = base;
      p.gamma = g;
      const ZeroSet zs = aj_zeros(n, p);
      Real dist = 0;
      for (const Real& z : zs.negative) dist = std::max(dist, z - p.a);
      for (const Real& z : zs.positive) dist = std::max(dist, 1 - z);
      if (!first && !(dist < prev_dist)) decreasing = false;
      prev_dist = dist;
      first = false;
      final_dist = dist;
      final_gap = 1 - geometric_mean_at_zero(n, p) / int_pow(abs(p.a), n);
    }
    cor1_t.check(decreasing, "gamma grid {1e2,1e3,1e4}");
    cor1_t.observe(final_dist / (2 * final_gap), Real(1), "gamma=1e4 dist vs 2*gap");
  }

  const long f_trials = std::max<long>(8, opts.trials / 5);
  for (long t = 0; t < f_trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(1, std::min(opts.n_max, 6));
    const ZeroSet outer = aj_zeros(n, p);
    const ZeroSet inner =
        n >= 2 ? aj_zeros(n - 1, raised(p)) : ZeroSet{{}, {}, Real(0)};
    for (const Real& z : outer.all()) {
      const Real f = abs(f_function(z, p, inner));
      const Real scale = f_pole_scale(z, p, inner);
      ff_t.observe(f / scale, 1000 * tol, describe(n, p, "zero=" + z.str(12)));
    }
  }

  const long l4_trials = std::max<long>(10, opts.trials / 2);
  for (long t = 0; t < l4_trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(1, std::min(opts.n_max, 5));
    const Real x = rng.uniform(0.0, 1.0) * (t % 2 == 0 ? Real(1) : p.a);
    const auto [r1, r2] = endpoint_derivative_residuals(n, p, x);
    const Real bound("1e-8");
    lem4_t.observe(r1, bound, describe(n, p, "x=" + x.str(12) + " (first identity)"));
    lem4_t.observe(r2, bound, describe(n, p, "x=" + x.str(12) + " (second identity)"));
  }

  const long sens_trials = std::max<long>(6, opts.trials / 8);
  const Real h = default_sensitivity_step();
  for (long t = 0; t < sens_trials; ++t) {
    const ParamSet p = rng.aj();
    const int n = rng.uniform_int(1, std::min(opts.n_max, 4));
    const std::string which = describe(n, p);
    const SensitivityVector da = zero_sensitivities(n, p, Wrt::Alpha, h);
    const SensitivityVector db = zero_sensitivities(n, p, Wrt::Beta, h);
    bool ok = true;
    for (const Real& v : da.values) ok = ok && v < 0;
    for (const Real& v : db.values) ok = ok && v > 0;
    thmD_t.check(ok, which);

    ParamSet pb = p;
    pb.beta += 1;  // Theorem 4 is stated for the beta+1 family
    const SensitivityVector dA = zero_sensitivities(n, pb, Wrt::A, h);
    bool ok4 = true;
    for (const Real& v : dA.values) ok4 = ok4 && v > 0;
    thm4_t.check(ok4, which);

    for (const double g : {50.0, 500.0, 5000.0}) {
      ParamSet pg = p;
      pg.gamma = g;
      const SensitivityVector dg = zero_sensitivities(n, pg, Wrt::Gamma, h);
      bool pat = true;
      for (int i = 0; i < n; ++i) pat = pat && dg.values[static_cast<std::size_t>(i)] < 0;
      for (int i = n; i < 2 * n; ++i) pat = pat && dg.values[static_cast<std::size_t>(i)] > 0;
      thm2_t.check(pat, describe(n, pg));
    }

    // section 5 diagnostics at large gamma: zero zones and the summed
    // gamma-sensitivity window
    {
      ParamSet pg = p;
      pg.gamma = 500;
      const ZeroSet zs = aj_zeros(n, pg);
      bool zones = true;
      for (const Real& z : zs.negative) zones = zones && pg.a < z && z < pg.a / 2;
      for (const Real& z : zs.positive) zones = zones && Real(1) / 2 < z && z < 1;
      const SensitivityVector dg = zero_sensitivities(n, pg, Wrt::Gamma, h);
      Real sum = 0;
      for (const Real& v : dg.values) sum += v;
      const Real lo = -(1 - pg.a) * (1 - pg.a) / 4;
      const Real hi = -(1 - pg.a) * (1 - pg.a) / (4 * pg.a);
      bounds_t.check(zones && lo < sum && sum < hi, describe(n, pg, "sum=" + sum.str(8)));
    }
  }

  return finish("means", {am_t, amd_t, gm_t, gmd_t, cor1_t, ff_t, lem4_t, thmD_t, thm4_t, thm2_t,
                          bounds_t});
}

SuiteReport run_electro_suite(const VerifyOptions& opts) {
  ParamSampler rng(opts.seed);
  const Real tol = session_tolerance().rel_identity;
  Tracker orth_t("classical-jacobi-orthogonality"), grad_t("stieltjes-gradient-vanishing");
  Tracker min_t("stieltjes-local-minimum"), thmA_t("thmA-alpha-beta-signs");
  Tracker hess_t("energy-hessian-positive-definite");

  const long trials = std::max<long>(8, opts.trials / 5);
  for (long t = 0; t < trials; ++t) {
    const ClassicalJacobiParams p = rng.jacobi();
    const int n = rng.uniform_int(1, opts.n_max);
    std::ostringstream os;
    os << "n=" << n << " alpha=" << p.alpha.str(12) << " beta=" << p.beta.str(12);
    const std::string which = os.str();

    orth_t.observe(check_orthogonality_jacobi(n, p.alpha, p.beta), tol, which);

    const Poly jac = build_classical_jacobi(n, p.alpha, p.beta);
    const Configuration zeros{find_zeros_interval(jac, n, Real(-1), Real(1))};
    const std::vector<Real> g = energy_gradient(zeros, p.alpha, p.beta);
    Real gnorm = 0;
    for (const Real& v : g) gnorm = std::max(gnorm, abs(v));
    grad_t.observe(gnorm, 1000 * tol, which);

    // comparative minimality against jittered configurations
    const Real e0 = energy(zeros, p.alpha, p.beta).total;
    bool all_above = true;
    const long jitters = std::max<long>(20, opts.trials);
    for (long j = 0; j < jitters && all_above; ++j) {
      Configuration c = zeros;
      bool moved = false;
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        const Real left = i == 0 ? Real(-1) : zeros.points[i - 1];
        const Real right = i + 1 == c.points.size() ? Real(1) : zeros.points[i + 1];
        const Real room = std::min(zeros.points[i] - left, right - zeros.points[i]);
        const Real u = rng.uniform(-0.45, 0.45);
        if (u != 0) moved = true;
        c.points[i] = zeros.points[i] + u * room;
      }
      if (!moved) continue;
      all_above = energy(c, p.alpha, p.beta).total > e0;
    }
    min_t.check(all_above, which);

    const Real h("1e-8");
    const auto za = find_zeros_interval(build_classical_jacobi(n, p.alpha + h, p.beta), n, Real(-1), Real(1));
    const auto za2 = find_zeros_interval(build_classical_jacobi(n, p.alpha - h, p.beta), n, Real(-1), Real(1));
    const auto zb = find_zeros_interval(build_classical_jacobi(n, p.alpha, p.beta + h), n, Real(-1), Real(1));
    const auto zb2 = find_zeros_interval(build_classical_jacobi(n, p.alpha, p.beta - h), n, Real(-1), Real(1));
    bool signs = true;
    for (int i = 0; i < n; ++i) {
      signs = signs && (za[static_cast<std::size_t>(i)] - za2[static_cast<std::size_t>(i)]) < 0 &&
              (zb[static_cast<std::size_t>(i)] - zb2[static_cast<std::size_t>(i)]) > 0;
    }
    thmA_t.check(signs, which);
  }

  // one FD-Hessian positive-definiteness spot check
  {
    const int n = 4;
    const Real alpha("0.7"), beta("1.3");
    const Poly jac = build_classical_jacobi(n, alpha, beta);
    const Configuration zeros{find_zeros_interval(jac, n, Real(-1), Real(1))};
    const Real h = pow2(-40);
    std::vector<std::vector<Real>> H(static_cast<std::size_t>(n), std::vector<Real>(static_cast<std::size_t>(n)));
    auto energy_at = [&](const std::vector<Real>& pts) {
      Configuration c;
      c.points = pts;
      return energy(c, alpha, beta).total;
    };
    const Real e0 = energy_at(zeros.points);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        std::vector<Real> pp = zeros.points, pm = zeros.points, mp = zeros.points, mm = zeros.points;
        pp[static_cast<std::size_t>(i)] += h;
        pp[static_cast<std::size_t>(j)] += h;
        mm[static_cast<std::size_t>(i)] -= h;
        mm[static_cast<std::size_t>(j)] -= h;
        Real v;
        if (i == j) {
          std::vector<Real> up = zeros.points, dn = zeros.points;
          up[static_cast<std::size_t>(i)] += h;
          dn[static_cast<std::size_t>(i)] -= h;
          v = (energy_at(up) - 2 * e0 + energy_at(dn)) / (h * h);
        } else {
          pm[static_cast<std::size_t>(i)] += h;
          pm[static_cast<std::size_t>(j)] -= h;
          mp[static_cast<std::size_t>(i)] -= h;
          mp[static_cast<std::size_t>(j)] += h;
          v = (energy_at(pp) - energy_at(pm) - energy_at(mp) + energy_at(mm)) / (4 * h * h);
        }
        H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        H[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      }
    }
    // Cholesky succeeds iff positive definite
    bool pd = true;
    for (int i = 0; i < n && pd; ++i) {
      for (int j = 0; j <= i && pd; ++j) {
        Real s = H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int k = 0; k < j; ++k)
          s -= H[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
               H[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (i == j) {
          if (!(s > 0)) {
            pd = false;
            break;
          }
          H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sqrt(s);
        } else {
          H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              s / H[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
        }
      }
    }
    hess_t.check(pd, "n=4 alpha=0.7 beta=1.3");
  }

  return finish("electro", {orth_t, grad_t, min_t, thmA_t, hess_t});
}

SuiteReport run_limits_suite(const VerifyOptions& opts) {
  ParamSampler rng(opts.seed);
  const Real tol = session_tolerance().rel_identity;
  Tracker jl_t("jl-limit-convergence"), lh_t("lh-limit-convergence"), sym_t("lh-symmetry");

  const std::vector<Real> grid{Real(100), Real(1000), Real(10000), Real(100000)};
  const int n_cap = std::min(opts.n_max, 3);
  for (int n = 1; n <= n_cap; ++n) {
    const JacobiLaguerreParams p = rng.jl();
    const auto rows = limit_convergence_jl(n, p.beta, p.gamma, p.a, grid);
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      decreasing = decreasing && rows[i].max_coeff_err < rows[i - 1].max_coeff_err;
    jl_t.check(decreasing && rows.back().order && *rows.back().order >= Real("0.9"),
               describe(n, p, "final_order=" + (rows.back().order ? rows.back().order->str(6) : "none")));

    const Real gamma = rng.uniform(-0.9, 5);
    const auto hrows = limit_convergence_lh(n, gamma, grid);
    bool hdec = true;
    for (std::size_t i = 1; i < hrows.size(); ++i)
      hdec = hdec && hrows[i].max_coeff_err < hrows[i - 1].max_coeff_err;
    std::ostringstream os;
    os << "n=" << n << " gamma=" << gamma.str(12)
       << " final_order=" << (hrows.back().order ? hrows.back().order->str(6) : "none");
    lh_t.check(hdec && hrows.back().order && *hrows.back().order >= Real("0.9"), os.str());
  }

  const long sym_trials = std::max<long>(8, opts.trials / 5);
  for (long t = 0; t < sym_trials; ++t) {
    const Real gamma = rng.uniform(-0.9, 5);
    const int n = rng.uniform_int(1, std::min(opts.n_max, 6));
    std::ostringstream os;
    os << "n=" << n << " gamma=" << gamma.str(12);
    const Poly h = build_lh(n, gamma);
    Real cmax = 0, odd = 0;
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
      cmax = std::max(cmax, abs(h.coeffs[i]));
      if (i % 2 == 1) odd = std::max(odd, abs(h.coeffs[i]));
    }
    sym_t.observe(odd / std::max(cmax, Real(1)), tol, os.str() + " (odd coefficients)");
    const ZeroSet zs = lh_zeros(n, gamma);
    Real zerr = 0;
    for (int i = 0; i < n; ++i) {
      zerr = std::max(zerr, abs(zs.negative[static_cast<std::size_t>(i)] +
                                zs.positive[static_cast<std::size_t>(n - 1 - i)]));
    }
    sym_t.observe(zerr, tol, os.str() + " (zero symmetry)");
  }

  return finish("limits", {jl_t, lh_t, sym_t});
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (suite == "structure") return run_structure_suite(opts);
  if (suite == "interlacing") return run_interlacing_suite(opts);
  if (suite == "raising") return run_raising_suite(opts);
  if (suite == "orthogonality") return run_orthogonality_suite(opts);
  if (suite == "means") return run_means_suite(opts);
  if (suite == "electro") return run_electro_suite(opts);
  if (suite == "limits") return run_limits_suite(opts);
  throw DomainError("unknown verify suite '" + suite + "'");
}

}  // namespace mopz
