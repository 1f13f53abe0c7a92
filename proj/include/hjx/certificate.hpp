#pragma once

// JSON certificates for every search result, and the verifier that re-checks
// them from scratch.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hjx/coloring.hpp"
#include "hjx/configurations.hpp"
#include "hjx/grid_search.hpp"
#include "hjx/reductions.hpp"
#include "hjx/search.hpp"

namespace hjx {

using Json = nlohmann::ordered_json;

Json family_to_json(const ConfigFamily& family);
ConfigFamily family_from_json(const Json& j);

/// Sorted array of decimal strings.
Json integers_to_json(std::vector<BigInt> values);
std::vector<BigInt> integers_from_json(const Json& j);

Json reduction_to_json(const ReductionKind& kind);
ReductionKind reduction_from_json(const Json& j);

/// {"mod": q, "colors": [...]} or {"map": {"12": 1, ...}}.
Json base_coloring_to_json(const BaseColoring& base);
BaseColoring base_coloring_from_json(const Json& j);

/// Where the colors of a witness certificate come from.
struct ConstantSource {
  Color color = 1;
};
struct PullbackSource {
  ReductionKind kind;
  BaseColoring base;
};
struct ExplicitSource {
  Coloring coloring;
};
using ColoringSource = std::variant<ConstantSource, PullbackSource, ExplicitSource>;

/// The full coloring of the N-universe described by source.
Coloring materialize(const ColoringSource& source, std::uint32_t n, const Alphabet& alphabet);

struct WitnessCertificate {
  std::uint32_t n = 1;
  std::uint32_t sigma = 1;
  ConfigFamily family = ConfigFamily::plain(1);
  ColoringSource source;
  Witness witness;
  std::vector<std::pair<LocatedWord, Color>> points;
};

struct ProperColoringCertificate {
  std::uint32_t n = 1;
  std::uint32_t sigma = 1;
  ConfigFamily family = ConfigFamily::plain(1);
  std::uint32_t r = 1;
  Coloring coloring;
};

struct UnsatCertificate {
  std::uint32_t n = 1;
  std::uint32_t sigma = 1;
  ConfigFamily family = ConfigFamily::plain(1);
  std::uint32_t r = 1;
};

using Certificate =
    std::variant<WitnessCertificate, ProperColoringCertificate, UnsatCertificate, GridPartition>;

/// Fills in the point list from the coloring.
WitnessCertificate make_witness_certificate(std::uint32_t n, std::uint32_t sigma,
                                            const ConfigFamily& family, ColoringSource source,
                                            const Coloring& coloring, const Witness& witness);

/// Pretty-printed JSON with a trailing newline. Deterministic.
std::string serialize(const Certificate& certificate);

/// Throws ParseError on schema violations.
Certificate parse_certificate(const std::string& text);

struct Verdict {
  bool ok = false;
  std::string reason;
};

struct VerifyOptions {
  std::uint64_t universe_cap = kDefaultUniverseCap;
  std::uint64_t max_nodes = std::uint64_t{1} << 32;
};

/// Re-derives every claim of the certificate independently of how it was
/// produced. ResourceLimit propagates.
Verdict verify(const Certificate& certificate, const VerifyOptions& options = {});

/// Parses, requires the text to be exactly the canonical serialization of
/// what it parses to, then verifies.
Verdict verify_text(const std::string& text, const VerifyOptions& options = {});

}  // namespace hjx
