#include "gradus/serialize.hpp"

#include "gradus/error.hpp"

namespace gradus {
namespace {

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T get_as(const Json& doc, const char* key) {
  try {
    return member(doc, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("wrong type for key '") + key + "'");
  }
}

// Coordinates and fields are strings, but plain JSON integers are accepted too.
std::string text_of(const Json& value, const char* key) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw ParseError(std::string("expected a string or integer in '") + key + "'");
}

Json nullable(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const PointSet& points) {
  Json doc;
  doc["n"] = points.dimension();
  doc["field"] = points.field().to_string();
  doc["seed"] = points.seed() ? Json(*points.seed()) : Json(nullptr);
  Json list = Json::array();
  for (const auto& p : points.points()) {
    Json coords = Json::array();
    for (const auto& c : p.coords()) coords.push_back(c.to_string());
    list.push_back(std::move(coords));
  }
  doc["points"] = std::move(list);
  return doc;
}

PointSet point_set_from_json(const Json& doc) {
  const auto n = get_as<std::size_t>(doc, "n");
  const FieldSpec field = FieldSpec::parse(text_of(member(doc, "field"), "field"));
  std::optional<std::uint64_t> seed;
  if (doc.contains("seed") && !doc["seed"].is_null()) seed = get_as<std::uint64_t>(doc, "seed");
  const Json& list = member(doc, "points");
  if (!list.is_array()) throw ParseError("'points' must be an array");
  std::vector<ProjectivePoint> points;
  for (const auto& row : list) {
    if (!row.is_array()) throw ParseError("each point must be an array of coordinates");
    std::vector<Scalar> coords;
    for (const auto& c : row) coords.push_back(Scalar::parse(field, text_of(c, "points")));
    points.emplace_back(std::move(coords));
  }
  return PointSet(n, field, std::move(points), seed);
}

Json to_json(const Ideal& ideal) {
  const RingSpec& ring = ideal.ring();
  Json doc;
  doc["ring"] = {{"nvars", ring.nvars}, {"field", ring.field.to_string()}, {"order", ring.order.to_string()}};
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  doc["generators"] = std::move(gens);
  return doc;
}

Ideal ideal_from_json(const Json& doc) {
  const Json& ring_doc = member(doc, "ring");
  const auto nvars = get_as<std::size_t>(ring_doc, "nvars");
  const FieldSpec field = FieldSpec::parse(text_of(member(ring_doc, "field"), "field"));
  const TermOrder order =
      ring_doc.contains("order") ? TermOrder::parse(get_as<std::string>(ring_doc, "order")) : TermOrder::grevlex();
  const RingSpec ring = RingSpec::make(nvars, field, order);
  return Ideal::parse(ring, get_as<std::vector<std::string>>(doc, "generators"));
}

Json to_json(const HilbertFunction& hf, std::optional<bool> artinian) {
  Json doc;
  doc["values"] = hf.values;
  doc["stable_from"] = nullable(hf.stable_from);
  doc["polynomial"] = hf.polynomial ? Json(hf.polynomial->to_string()) : Json(nullptr);
  if (artinian) doc["artinian"] = *artinian;
  return doc;
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  }
  Json doc;
  doc["betti"] = std::move(entries);
  doc["totals"] = table.totals();
  doc["max_degree"] = table.max_degree;
  doc["degree_bound"] = table.degree_bound;
  doc["truncated"] = table.truncated;
  return doc;
}

Json to_json(const SocleReport& report) {
  return {{"artinian", report.artinian},
          {"socle_degree", nullable(report.socle_degree)},
          {"initial_degree", report.initial_degree}};
}

Json to_json(const ArtinianCertificate& cert) {
  return {{"artinian", cert.pure_powers && cert.eventual_zero},
          {"pure_powers", cert.pure_powers},
          {"eventual_zero", cert.eventual_zero},
          {"probe_degree", cert.probe_degree}};
}

Json to_json(const HomProfile& profile) {
  Json dims = Json::array();
  for (const auto& [i, d] : profile.dims) dims.push_back({{"degree", i}, {"dim", d}});
  return {{"dims", std::move(dims)},
          {"witness", profile.witness.to_string()},
          {"delta", profile.delta},
          {"s", profile.s}};
}

Json to_json(const ThetaReport& report) {
  Json dims = Json::array();
  for (const auto& [i, d] : report.kernel_dims) dims.push_back({{"degree", i}, {"kernel_dim", d}});
  return {{"kernel_dims", std::move(dims)},
          {"probed_to", report.probed_to},
          {"injective_up_to_probe", report.injective_up_to_probe()},
          {"summary", report.summary()}};
}

Json to_json(const ExperimentReport& report) {
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  Json values = Json::object();
  for (const auto& [k, v] : report.values) values[k] = v;
  Json assertions = Json::array();
  for (const auto& a : report.assertions) {
    assertions.push_back({{"name", a.name},
                          {"expected", a.expected},
                          {"computed", a.computed},
                          {"provenance", to_string(a.provenance)},
                          {"checked", a.checked},
                          {"passed", a.passed},
                          {"note", a.note}});
  }
  return {{"name", report.name},
          {"inputs", std::move(inputs)},
          {"values", std::move(values)},
          {"assertions", std::move(assertions)},
          {"passed", report.passed()}};
}

}  // namespace gradus
