#include "mopz/sweep.hpp"

#include "mopz/angelesco.hpp"
#include "mopz/families.hpp"

#include <sstream>

namespace mopz {

namespace {

ParamSet with_value(const ParamSet& base, Wrt wrt, const Real& v) {
  ParamSet p = base;
  switch (wrt) {
    case Wrt::Alpha: p.alpha = v; break;
    case Wrt::Beta: p.beta = v; break;
    case Wrt::Gamma: p.gamma = v; break;
    case Wrt::A: p.a = v; break;
  }
  return p;
}

ZeroSet family_zeros(Family family, int n, const ParamSet& p) {
  switch (family) {
    case Family::AngelescoJacobi:
      return find_zeros(build_aj(n, p), n, n, ZeroBounds{p.a, Real(1)});
    case Family::JacobiLaguerre:
      return find_zeros(build_jl(n, p.beta, p.gamma, p.a), n, n, ZeroBounds{p.a, std::nullopt});
    case Family::LaguerreHermite:
      return find_zeros(build_lh(n, p.gamma), n, n, ZeroBounds{std::nullopt, std::nullopt});
    default:
      throw DomainError("sweep supports the aj, jl and lh families");
  }
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
  if (!(opts.step > 0)) throw DomainError("sweep step must be positive");
  if (!(opts.lo <= opts.hi)) throw DomainError("empty sweep range");
  if (opts.n < 1 || opts.n > 12) throw DomainError("sweep supports 1 <= n <= 12");
  if (opts.family == Family::LaguerreHermite && opts.wrt != Wrt::Gamma)
    throw DomainError("the lh family only has the gamma parameter");
  if (opts.family == Family::JacobiLaguerre && opts.wrt == Wrt::Alpha)
    throw DomainError("the jl family has no alpha parameter");

  SweepResult res;
  res.opts = opts;
  const Real h = default_sensitivity_step();
  for (Real v = opts.lo; v <= opts.hi; v += opts.step) {
    SweepRecord rec;
    rec.value = v;
    try {
      const ParamSet p = with_value(opts.base, opts.wrt, v);
      rec.zeros = family_zeros(opts.family, opts.n, p);
      const ZeroSet up = family_zeros(opts.family, opts.n, with_value(opts.base, opts.wrt, v + h));
      const ZeroSet dn = family_zeros(opts.family, opts.n, with_value(opts.base, opts.wrt, v - h));
      const std::vector<Real> zu = up.all(), zd = dn.all();
      for (std::size_t i = 0; i < zu.size(); ++i)
        rec.sensitivities.push_back((zu[i] - zd[i]) / (2 * h));
      rec.sign_pattern.reserve(rec.sensitivities.size());
      for (const Real& s : rec.sensitivities)
        rec.sign_pattern += (s > 0 ? '+' : (s < 0 ? '-' : '0'));
      bool split = true;
      for (int i = 0; i < opts.n; ++i)
        split = split && rec.sensitivities[static_cast<std::size_t>(i)] < 0;
      for (int i = opts.n; i < 2 * opts.n; ++i)
        split = split && rec.sensitivities[static_cast<std::size_t>(i)] > 0;
      rec.gamma_split_pattern = split;
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
      ++res.failures;
    }
    res.records.push_back(std::move(rec));
  }

  if (opts.wrt == Wrt::Gamma) {
    for (std::size_t i = 0; i < res.records.size(); ++i) {
      bool holds = true;
      for (std::size_t j = i; j < res.records.size(); ++j)
        holds = holds && res.records[j].ok && res.records[j].gamma_split_pattern;
      if (holds) {
        res.gamma_star = res.records[i].value;
        break;
      }
    }
  }
  return res;
}

namespace {

std::string joined(const std::vector<Real>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ';';
    out += decimal_string(vs[i]);
  }
  return out;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepResult& res, const RunManifest& manifest) {
  os << "# mopz sweep v" << manifest.version << "\n";
  os << "# command: " << manifest.command_line << "\n";
  os << "# precision_bits: " << manifest.precision_bits << " seed: " << manifest.seed
     << " timestamp: " << manifest.timestamp << "\n";
  os << "# swept: " << wrt_name(res.opts.wrt) << " over [" << decimal_string(res.opts.lo) << ", "
     << decimal_string(res.opts.hi) << "] step " << decimal_string(res.opts.step) << "\n";
  if (res.gamma_star)
    os << "# gamma_star: " << decimal_string(*res.gamma_star)
       << " (split sign pattern holds from here through the end of the grid)\n";
  else if (res.opts.wrt == Wrt::Gamma)
    os << "# gamma_star: none (split sign pattern does not stabilize on this grid)\n";
  os << "# columns: index, swept value; base parameters; ok=1 when zeros were isolated;\n";
  os << "#   zeros_neg/zeros_pos sorted ascending, ';'-joined; sens = central differences\n";
  os << "#   d(zero)/d(" << wrt_name(res.opts.wrt) << "); sign_pattern one of -?0?+ per zero;\n";
  os << "#   split_pattern=1 when the first n entries are negative and the last n positive\n";
  os << "index," << wrt_name(res.opts.wrt)
     << ",family,n,alpha,beta,gamma,a,ok,error,zeros_neg,zeros_pos,refined_to,sens,sign_pattern,"
        "split_pattern\n";
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    const SweepRecord& r = res.records[i];
    const ParamSet p = [&] {
      ParamSet q = res.opts.base;
      switch (res.opts.wrt) {
        case Wrt::Alpha: q.alpha = r.value; break;
        case Wrt::Beta: q.beta = r.value; break;
        case Wrt::Gamma: q.gamma = r.value; break;
        case Wrt::A: q.a = r.value; break;
      }
      return q;
    }();
    os << i << ',' << decimal_string(r.value) << ',' << family_name(res.opts.family) << ','
       << res.opts.n << ',' << decimal_string(p.alpha) << ',' << decimal_string(p.beta) << ','
       << decimal_string(p.gamma) << ',' << decimal_string(p.a) << ',' << (r.ok ? 1 : 0) << ','
       << '"' << r.error << '"' << ',' << joined(r.zeros.negative) << ','
       << joined(r.zeros.positive) << ','
       << (r.ok ? decimal_string(r.zeros.refined_to) : std::string()) << ','
       << joined(r.sensitivities) << ',' << r.sign_pattern << ','
       << (r.gamma_split_pattern ? 1 : 0) << "\n";
  }
}

}  // namespace mopz
