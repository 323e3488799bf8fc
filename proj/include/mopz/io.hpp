#pragma once

#include "mopz/poly.hpp"
#include "mopz/zeros.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace mopz {

// ordered_json keeps insertion order, so identical runs serialize
// byte-identically (the timestamp field aside).
using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

// Enough to reproduce an output file byte-identically with the same build.
struct RunManifest {
  std::string command_line;
  unsigned precision_bits = 0;
  std::uint64_t seed = 0;
  std::string version = kArtifactVersion;
  std::string timestamp;  // UTC, ISO-8601
};

RunManifest make_manifest(const std::string& command_line, std::uint64_t seed);

Json to_json(const RunManifest& m);
Json to_json(const FamilyParams& params);
Json to_json(const ZeroSet& zs);
Json coeffs_json(const Poly& p);

}  // namespace mopz
