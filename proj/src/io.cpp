#include "mopz/io.hpp"

#include <chrono>
#include <ctime>

namespace mopz {

RunManifest make_manifest(const std::string& command_line, std::uint64_t seed) {
  RunManifest m;
  m.command_line = command_line;
  m.precision_bits = precision_bits();
  m.seed = seed;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  m.timestamp = buf;
  return m;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command_line"] = m.command_line;
  j["precision_bits"] = m.precision_bits;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["timestamp"] = m.timestamp;
  return j;
}

Json to_json(const FamilyParams& params) {
  Json j;
  if (const auto* aj = std::get_if<ParamSet>(&params)) {
    j["alpha"] = decimal_string(aj->alpha);
    j["beta"] = decimal_string(aj->beta);
    j["gamma"] = decimal_string(aj->gamma);
    j["a"] = decimal_string(aj->a);
  } else if (const auto* jl = std::get_if<JacobiLaguerreParams>(&params)) {
    j["beta"] = decimal_string(jl->beta);
    j["gamma"] = decimal_string(jl->gamma);
    j["a"] = decimal_string(jl->a);
  } else if (const auto* lh = std::get_if<LaguerreHermiteParams>(&params)) {
    j["gamma"] = decimal_string(lh->gamma);
  } else if (const auto* cj = std::get_if<ClassicalJacobiParams>(&params)) {
    j["alpha"] = decimal_string(cj->alpha);
    j["beta"] = decimal_string(cj->beta);
  }
  return j;
}

Json to_json(const ZeroSet& zs) {
  Json j;
  j["negative"] = Json::array();
  j["positive"] = Json::array();
  for (const Real& z : zs.negative) j["negative"].push_back(decimal_string(z));
  for (const Real& z : zs.positive) j["positive"].push_back(decimal_string(z));
  j["refined_to"] = decimal_string(zs.refined_to);
  return j;
}

Json coeffs_json(const Poly& p) {
  Json arr = Json::array();
  for (const Real& c : p.coeffs) arr.push_back(decimal_string(c));
  return arr;
}

}  // namespace mopz
