// mopz — construct diagonal Angelesco-Jacobi, Jacobi-Laguerre and
// Laguerre-Hermite polynomials, locate their zeros, and run the property,
// sweep and reproduction suites. Exit codes: 0 success, 1 property failure,
// 2 usage or domain error.

#include "mopz/angelesco.hpp"
#include "mopz/electro.hpp"
#include "mopz/families.hpp"
#include "mopz/figure1.hpp"
#include "mopz/io.hpp"
#include "mopz/sweep.hpp"
#include "mopz/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace mopz;

std::string reassemble_command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  os << content;
}

void emit(const std::optional<std::string>& out, const std::string& content) {
  if (out)
    write_text(*out, content);
  else
    std::cout << content;
}

struct FamilyArgs {
  std::string family = "aj";
  int n = 1;
  double alpha = 0, beta = 0, gamma = 0, a = -1;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("--family", fa.family, "family: aj | jl | lh | jacobi")
      ->check(CLI::IsMember({"aj", "jl", "lh", "jacobi"}));
  cmd->add_option("--n", fa.n, "family index (half-degree for aj/jl/lh)")->required();
  cmd->add_option("--alpha", fa.alpha, "alpha exponent");
  cmd->add_option("--beta", fa.beta, "beta exponent");
  cmd->add_option("--gamma", fa.gamma, "gamma exponent");
  cmd->add_option("--a", fa.a, "left endpoint a < 0");
}

Poly build_family(const FamilyArgs& fa, BuildDiagnostics* diag = nullptr) {
  if (fa.n < 0 || fa.n > 12)
    throw DomainError("n must be in [0, 12]; raise --prec before going higher");
  if (fa.family == "aj") return build_aj(fa.n, ParamSet{fa.alpha, fa.beta, fa.gamma, fa.a});
  if (fa.family == "jl") return build_jl(fa.n, fa.beta, fa.gamma, fa.a, diag);
  if (fa.family == "lh") return build_lh(fa.n, fa.gamma, diag);
  return build_classical_jacobi(fa.n, fa.alpha, fa.beta);
}

Json suite_json(const SuiteReport& rep, const RunManifest& manifest, const VerifyOptions& opts) {
  Json j;
  j["manifest"] = to_json(manifest);
  j["suite"] = rep.suite;
  j["options"] = {{"trials", opts.trials}, {"seed", opts.seed}, {"n_max", opts.n_max}};
  j["pass"] = rep.pass;
  Json props = Json::array();
  for (const PropertyResult& p : rep.properties) {
    props.push_back({{"name", p.name},
                     {"pass", p.pass},
                     {"cases", p.cases},
                     {"worst", p.worst_metric},
                     {"worst_case", p.worst_case}});
  }
  j["properties"] = props;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple orthogonal polynomial zero laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  unsigned prec = kDefaultPrecisionBits;
  if (const char* env = std::getenv("MOPZ_PREC")) prec = static_cast<unsigned>(std::atoi(env));
  std::uint64_t seed = 42;
  std::optional<std::string> out_path;
  std::string format = "json";
  app.add_option("--prec", prec, "working precision in bits (>= 96)");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--out", out_path, "output file (default: stdout / fig1 prefix)");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  FamilyArgs build_args;
  CLI::App* cmd_build = app.add_subcommand("build", "construct a polynomial, emit coefficients");
  add_family_options(cmd_build, build_args);

  FamilyArgs zeros_args;
  CLI::App* cmd_zeros = app.add_subcommand("zeros", "construct and emit the zero set");
  add_family_options(cmd_zeros, zeros_args);

  std::string suite = "structure";
  VerifyOptions vopts;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run a property suite");
  cmd_verify->add_option("--suite", suite, "structure | interlacing | raising | orthogonality | means | electro | limits")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  cmd_verify->add_option("--trials", vopts.trials, "randomized trial count");
  cmd_verify->add_option("--n-max", vopts.n_max, "largest family index exercised");

  std::string sweep_wrt = "gamma";
  std::string sweep_range;
  FamilyArgs sweep_args;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep one parameter, emit CSV records");
  cmd_sweep->add_option("--wrt", sweep_wrt, "alpha | beta | gamma | a")
      ->check(CLI::IsMember({"alpha", "beta", "gamma", "a"}));
  cmd_sweep->add_option("--range", sweep_range, "lo:hi:step")->required();
  add_family_options(cmd_sweep, sweep_args);

  FamilyArgs limits_args;
  std::vector<double> alpha_grid{1e2, 1e3, 1e4, 1e5};
  CLI::App* cmd_limits = app.add_subcommand("limits", "alpha -> inf convergence table");
  add_family_options(cmd_limits, limits_args);
  cmd_limits->add_option("--alpha-grid", alpha_grid, "increasing alpha values (>= 10)");

  double energy_alpha = 0, energy_beta = 0;
  std::vector<double> energy_points;
  int energy_jacobi_n = 0;
  CLI::App* cmd_energy = app.add_subcommand("energy", "logarithmic energy and gradient");
  cmd_energy->add_option("--alpha", energy_alpha, "alpha exponent");
  cmd_energy->add_option("--beta", energy_beta, "beta exponent");
  cmd_energy->add_option("--points", energy_points, "configuration points in (-1,1)");
  cmd_energy->add_option("--jacobi-n", energy_jacobi_n,
                         "use the zeros of the degree-n classical Jacobi polynomial");

  int fig1_samples = 2001;
  CLI::App* cmd_fig1 = app.add_subcommand("plot-fig1", "emit the interlacing figure data");
  cmd_fig1->add_option("--samples", fig1_samples, "curve sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    set_precision_bits(prec);
    vopts.seed = seed;
    const RunManifest manifest = make_manifest(reassemble_command_line(argc, argv), seed);

    if (*cmd_build) {
      BuildDiagnostics diag{Real(0)};
      const Poly p = build_family(build_args, &diag);
      Json j;
      j["manifest"] = to_json(manifest);
      j["family"] = family_name(p.family);
      j["n"] = p.n;
      j["params"] = to_json(p.params);
      j["precision_bits"] = precision_bits();
      j["coeffs"] = coeffs_json(p);
      if (p.family == Family::AngelescoJacobi) {
        const auto& ps = std::get<ParamSet>(p.params);
        const Real closed = aj_constant_term(p.n, ps);
        const Real got = p.coeffs.front();
        Json check;
        check["constant_term"] = decimal_string(got);
        check["closed_form"] = decimal_string(closed);
        check["rel_error"] =
            decimal_string(abs(got - closed) / std::max(Real(1), abs(closed)));
        j["constant_term_check"] = check;
      } else {
        j["constant_term_check"] = nullptr;
        if (p.family == Family::JacobiLaguerre || p.family == Family::LaguerreHermite)
          j["moment_system_condition"] = decimal_string(diag.condition_proxy);
      }
      emit(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (*cmd_zeros) {
      const Poly p = build_family(zeros_args);
      ZeroSet zs;
      if (p.family == Family::ClassicalJacobi) {
        zs.positive = find_zeros_interval(p, p.n, Real(-1), Real(1));
        zs.refined_to = 0;
      } else {
        ZeroBounds b;
        if (p.family == Family::AngelescoJacobi) {
          const auto& ps = std::get<ParamSet>(p.params);
          b = ZeroBounds{ps.a, Real(1)};
        } else if (p.family == Family::JacobiLaguerre) {
          b = ZeroBounds{std::get<JacobiLaguerreParams>(p.params).a, std::nullopt};
        }
        zs = find_zeros(p, p.n, p.n, b);
      }
      Json j;
      j["manifest"] = to_json(manifest);
      j["family"] = family_name(p.family);
      j["n"] = p.n;
      j["params"] = to_json(p.params);
      j["zeros"] = to_json(zs);
      emit(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (*cmd_verify) {
      SuiteReport rep = run_suite(suite, vopts);
      emit(out_path, suite_json(rep, manifest, vopts).dump(2) + "\n");
      if (!rep.pass) {
        std::cerr << "verify: suite '" << suite << "' FAILED\n";
        return 1;
      }
      return 0;
    }

    if (*cmd_sweep) {
      SweepOptions so;
      if (sweep_wrt == "alpha") so.wrt = Wrt::Alpha;
      else if (sweep_wrt == "beta") so.wrt = Wrt::Beta;
      else if (sweep_wrt == "a") so.wrt = Wrt::A;
      else so.wrt = Wrt::Gamma;
      std::istringstream is(sweep_range);
      std::string lo, hi, step;
      if (!std::getline(is, lo, ':') || !std::getline(is, hi, ':') || !std::getline(is, step))
        throw DomainError("range must be lo:hi:step");
      so.lo = parse_real(lo);
      so.hi = parse_real(hi);
      so.step = parse_real(step);
      if (sweep_args.family == "aj") so.family = Family::AngelescoJacobi;
      else if (sweep_args.family == "jl") so.family = Family::JacobiLaguerre;
      else if (sweep_args.family == "lh") so.family = Family::LaguerreHermite;
      else throw DomainError("sweep supports aj, jl, lh");
      so.n = sweep_args.n;
      so.base = ParamSet{sweep_args.alpha, sweep_args.beta, sweep_args.gamma, sweep_args.a};
      const SweepResult res = run_sweep(so);
      std::ostringstream os;
      write_sweep_csv(os, res, manifest);
      emit(out_path, os.str());
      return 0;
    }

    if (*cmd_limits) {
      std::vector<Real> grid(alpha_grid.begin(), alpha_grid.end());
      std::vector<LimitRow> rows;
      if (limits_args.family == "jl")
        rows = limit_convergence_jl(limits_args.n, limits_args.beta, limits_args.gamma,
                                    limits_args.a, grid);
      else if (limits_args.family == "lh")
        rows = limit_convergence_lh(limits_args.n, limits_args.gamma, grid);
      else
        throw DomainError("limits supports the jl and lh families");
      Json j;
      j["manifest"] = to_json(manifest);
      j["family"] = limits_args.family;
      j["n"] = limits_args.n;
      Json arr = Json::array();
      for (const LimitRow& r : rows) {
        Json row;
        row["alpha"] = decimal_string(r.alpha);
        row["max_coeff_err"] = decimal_string(r.max_coeff_err);
        if (r.order) row["order"] = decimal_string(*r.order);
        arr.push_back(row);
      }
      j["rows"] = arr;
      emit(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (*cmd_energy) {
      Configuration c;
      if (energy_jacobi_n > 0) {
        const Poly jac = build_classical_jacobi(energy_jacobi_n, energy_alpha, energy_beta);
        c.points = find_zeros_interval(jac, energy_jacobi_n, Real(-1), Real(1));
      } else {
        for (const double v : energy_points) c.points.push_back(Real(v));
      }
      const EnergyBreakdown e = energy(c, energy_alpha, energy_beta);
      const std::vector<Real> g = energy_gradient(c, energy_alpha, energy_beta);
      Json j;
      j["manifest"] = to_json(manifest);
      j["alpha"] = decimal_string(Real(energy_alpha));
      j["beta"] = decimal_string(Real(energy_beta));
      Json pts = Json::array(), grad = Json::array();
      for (const Real& x : c.points) pts.push_back(decimal_string(x));
      for (const Real& v : g) grad.push_back(decimal_string(v));
      j["points"] = pts;
      j["energy"] = {{"mutual", decimal_string(e.mutual)},
                     {"external", decimal_string(e.external)},
                     {"total", decimal_string(e.total)}};
      j["gradient"] = grad;
      emit(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (*cmd_fig1) {
      const Figure1Result fig = run_figure1(fig1_samples);
      const std::string prefix = out_path.value_or("fig1");
      const std::string csv_path = prefix + ".csv";
      std::ostringstream csv, gp;
      write_figure1_csv(csv, fig, manifest);
      write_figure1_gnuplot(gp, csv_path);
      write_text(csv_path, csv.str());
      write_text(prefix + ".gp", gp.str());
      write_text(prefix + ".json", figure1_json(fig, manifest).dump(2) + "\n");
      std::cout << "wrote " << csv_path << ", " << prefix << ".gp, " << prefix << ".json\n";
      return 0;
    }

    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
