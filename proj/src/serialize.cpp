#include "hexacycle/serialize.hpp"

#include "hexacycle/error.hpp"

namespace hexacycle::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

json rationals(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

PointClass parse_class(const std::string& name) {
  for (auto c : {PointClass::Boundary, PointClass::CubicCurveC, PointClass::SliceX0,
                 PointClass::SliceY0, PointClass::SliceZ0, PointClass::Hyperplane,
                 PointClass::Sporadic})
    if (name == class_name(c)) return c;
  throw Error(ErrorCode::Parse, "unknown classification '" + name + "'");
}

}  // namespace

json encode(const QuadMap& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs().coords()) coeffs.push_back(c.get_str());
  return {{"coeffs", coeffs}};
}

QuadMap quadmap_from_json(const json& j) {
  const json& c = field(j, "coeffs");
  if (!c.is_array() || c.size() != 6) throw Error(ErrorCode::Parse, "coeffs must hold six entries");
  std::vector<BigInt> raw;
  for (const auto& e : c) {
    if (!e.is_string()) throw Error(ErrorCode::Parse, "coefficients must be integer strings");
    raw.push_back(parse_bigint(e.get<std::string>()));
  }
  auto point = ProjPoint<5>::from_integers(raw);
  if (point.coords() != std::array<BigInt, 6>{raw[0], raw[1], raw[2], raw[3], raw[4], raw[5]})
    throw Error(ErrorCode::Parse, "coefficients are not in canonical form");
  return QuadMap(point);
}

json encode(const MarkedCycle& mc, const std::optional<json>& provenance) {
  json cycle = json::array();
  for (const auto& p : mc.points) cycle.push_back(p.str());
  json out{{"map", encode(mc.map)}, {"cycle", cycle}};
  if (provenance) out["provenance"] = *provenance;
  return out;
}

MarkedCycle marked_cycle_from_json(const json& j) {
  QuadMap f = quadmap_from_json(field(j, "map"));
  std::vector<P1Point> pts;
  for (const auto& e : field(j, "cycle")) {
    if (!e.is_string()) throw Error(ErrorCode::Parse, "cycle entries must be point strings");
    pts.push_back(P1Point::parse(e.get<std::string>()));
  }
  verify_cycle(f, pts);
  return {f, pts};
}

json encode(const ModelPoint& p) {
  json out{{"n", p.n}};
  if (p.n == 3) {
    out["point"] = std::get<P2Point>(p.proj).str();
  } else if (p.n == 4) {
    out["a1a2"] = std::get<P1Point>(p.proj).str();
    out["x"] = p.coords.at(0).str();
  } else {
    out["coords"] = rationals(p.coords);
  }
  return out;
}

ModelPoint model_point_from_json(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_unsigned()) throw Error(ErrorCode::Parse, "n must be a positive integer");
  unsigned k = n.get<unsigned>();
  if (k == 3) return model_point3(P2Point::parse(string_field(j, "point")));
  if (k == 4)
    return model_point4(P1Point::parse(string_field(j, "a1a2")), Rational::parse(string_field(j, "x")));
  std::vector<Rational> coords;
  for (const auto& e : field(j, "coords")) {
    if (!e.is_string()) throw Error(ErrorCode::Parse, "coords must be rational strings");
    coords.push_back(Rational::parse(e.get<std::string>()));
  }
  ModelPoint p = model_point(std::move(coords));
  if (p.n != k) throw Error(ErrorCode::Parse, "n does not match the number of coords");
  return p;
}

json encode(const OrbitReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(p.str());
  json out{{"points", pts}, {"cycle_found", r.cycle_found}};
  if (r.cycle_found) {
    out["preperiod"] = r.preperiod;
    out["period"] = r.period;
  }
  return out;
}

json encode(const IdentityRecord& r) {
  json out{{"name", r.name},
           {"status", r.verified ? "verified" : "failed"},
           {"witness", r.witness},
           {"description", r.description}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json encode(const std::vector<IdentityRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(encode(r));
  return out;
}

json encode(const SingularPointReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"point", e.point.str()},
                       {"on_surface", e.on_surface},
                       {"gradient_zero", e.gradient_zero},
                       {"hessian_zero", e.hessian_zero},
                       {"inside", e.inside}});
  json out{{"status", r.ok ? "verified" : "failed"}, {"points", entries}};
  if (!r.ok) out["failure"] = r.failure;
  return out;
}

json encode(const PrefactorReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates)
    cands.push_back({{"label", c.label},
                     {"numerator", c.numerator},
                     {"denominator", c.denominator},
                     {"consistent", c.consistent}});
  return {{"samples", rationals(r.samples)}, {"candidates", cands}};
}

json encode(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"exponents", exps}, {"coeff", c.str()}});
  return {{"vars", p.vars()}, {"terms", terms}, {"text", p.str()}};
}

json boundary_catalog_json() {
  json out = json::array();
  for (const auto& c : boundary_components())
    out.push_back({{"name", c.name},
                   {"kind", c.kind == ComponentKind::Line ? "line" : "conic"},
                   {"equations", {encode(c.first), encode(c.second)}}});
  return out;
}

json boundary_containment_json(std::size_t samples_per_component) {
  json out = json::array();
  for (const auto& c : boundary_components()) {
    auto pts = sample_component(c, samples_per_component);
    bool ok = pts.size() >= samples_per_component;
    std::string witness;
    for (const auto& p : pts) {
      if (!on_surface(p).on_surface || !c.contains(p) || s6_membership(p).inside) {
        ok = false;
        witness = p.str();
        break;
      }
    }
    json rec{{"component", c.name}, {"samples", pts.size()}, {"status", ok ? "verified" : "failed"}};
    if (!witness.empty()) rec["witness"] = witness;
    out.push_back(rec);
  }
  return out;
}

json encode(const EllipticFamilyMember& m) {
  json prov{{"family", std::string("elliptic-slice-") + slice_name(m.slice)},
            {"n", m.n},
            {"torsion", m.torsion},
            {"curve_point", m.curve_point.str()},
            {"surface_point", m.surface_point.str()},
            {"model_point", encode(m.model)}};
  return encode(m.cycle, prov);
}

json encode(const Genus0Member& m) {
  json prov{{"family", "genus0-p"},
            {"p", m.p.str()},
            {"fixed_point", m.fixed_point.str()},
            {"fixed_point_ok", m.fixed_point_ok},
            {"lambdas", rationals(m.lambdas)},
            {"lambda_ok", m.lambda_ok}};
  return encode(m.cycle, prov);
}

json encode(const SearchRecord& r) {
  return {{"point", r.point.str()},
          {"classification", class_name(r.classification.kind)},
          {"components", r.classification.components},
          {"orbit_rep", r.orbit_rep.str()},
          {"height", r.height.get_str()}};
}

SearchRecord search_record_from_json(const json& j) {
  Classification c;
  c.kind = parse_class(string_field(j, "classification"));
  for (const auto& e : field(j, "components")) c.components.push_back(e.get<std::string>());
  return {P3Point::parse(string_field(j, "point")), c, P3Point::parse(string_field(j, "orbit_rep")),
          parse_bigint(string_field(j, "height"))};
}

std::string csv_header() { return "height,orbit_rep,classification,W,X,Y,Z"; }

std::string to_csv(const SearchRecord& r) {
  std::string out = r.height.get_str() + "," + r.orbit_rep.str() + "," + r.classification.label();
  for (const auto& c : r.point.coords()) out += "," + c.get_str();
  return out;
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace hexacycle::io
