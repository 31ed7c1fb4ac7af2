#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gradus/betti.hpp"
#include "gradus/experiments.hpp"
#include "gradus/groebner.hpp"
#include "gradus/hilbert.hpp"
#include "gradus/hom.hpp"
#include "gradus/points.hpp"

namespace gradus {

using Json = nlohmann::ordered_json;

/// Version of the JSON documents below; bumped on incompatible changes.
inline constexpr const char* kSchemaVersion = "1";

// Readers throw ParseError naming the offending key.

/// {"n": 2, "field": "32003", "seed": 42, "points": [["1","0","0"], ...]}
Json to_json(const PointSet& points);
PointSet point_set_from_json(const Json& doc);

/// {"ring": {"nvars": 3, "field": "32003", "order": "grevlex"}, "generators": [...]}
Json to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& doc);

/// {"values": [...], "stable_from": k | null, "polynomial": "..." | null, "artinian": bool}
Json to_json(const HilbertFunction& hf, std::optional<bool> artinian = std::nullopt);

/// {"betti": [{"i":1,"j":2,"value":1}, ...], "totals": [...], "max_degree": D,
///  "degree_bound": B, "truncated": bool}
Json to_json(const BettiTable& table);

Json to_json(const SocleReport& report);
Json to_json(const ArtinianCertificate& cert);
Json to_json(const HomProfile& profile);
Json to_json(const ThetaReport& report);
Json to_json(const ExperimentReport& report);

}  // namespace gradus
