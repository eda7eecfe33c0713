#include "hexacycle/hexacycle.h"

#include <functional>
#include <sstream>
#include <string>
#include <utility>

#include "hexacycle/error.hpp"
#include "hexacycle/families.hpp"
#include "hexacycle/search.hpp"
#include "hexacycle/serialize.hpp"

using namespace hexacycle;
using io::json;

struct hxc_result {
  std::string text;
  std::string summary;
  bool passed = true;
};

struct hxc_search_config {
  SearchOptions options;
};

namespace {

hxc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HXC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HXC_ERR_PARSE;
    case ErrorCode::DivisionByZero: return HXC_ERR_DIVISION_BY_ZERO;
    case ErrorCode::ZeroPoint: return HXC_ERR_ZERO_POINT;
    case ErrorCode::MissingVariable: return HXC_ERR_MISSING_VARIABLE;
    case ErrorCode::DegenerateMap: return HXC_ERR_DEGENERATE_MAP;
    case ErrorCode::NotMinimalPeriod: return HXC_ERR_NOT_MINIMAL_PERIOD;
    case ErrorCode::NotOnSurface: return HXC_ERR_NOT_ON_SURFACE;
    case ErrorCode::Boundary: return HXC_ERR_BOUNDARY;
    case ErrorCode::OutsideChart: return HXC_ERR_OUTSIDE_CHART;
    case ErrorCode::ExcludedParameter: return HXC_ERR_EXCLUDED_PARAMETER;
  }
  return HXC_ERR_INTERNAL;
}

using Body = std::function<std::pair<std::string, std::string>()>;

thread_local bool g_passed = true;

hxc_status run(hxc_result** out, const Body& body) {
  hxc_status status = HXC_OK;
  auto* r = new hxc_result;
  g_passed = true;
  try {
    auto [text, summary] = body();
    r->text = std::move(text);
    r->summary = std::move(summary);
    r->passed = g_passed;
  } catch (const Error& e) {
    status = status_of(e.code());
    r->text = io::error_json(error_code_name(e.code()), e.what()).dump();
    r->summary = std::string("error: ") + e.what();
  } catch (const json::exception& e) {
    status = HXC_ERR_PARSE;
    r->text = io::error_json("parse", e.what()).dump();
    r->summary = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    status = HXC_ERR_INTERNAL;
    r->text = io::error_json("internal", e.what()).dump();
    r->summary = std::string("error: ") + e.what();
  }
  if (out) *out = r;
  else delete r;
  return status;
}

std::string require(const char* s, const char* what) {
  if (!s) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is required");
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) out.push_back(Rational::parse(part));
  return out;
}

// "[a:b],[c:d],..." into its bracketed pieces.
std::vector<std::string> bracket_groups(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = s.find('[', pos)) != std::string::npos) {
    auto end = s.find(']', pos);
    if (end == std::string::npos) throw Error(ErrorCode::Parse, "unbalanced '[' in '" + s + "'");
    out.push_back(s.substr(pos, end - pos + 1));
    pos = end + 1;
  }
  return out;
}

ModelPoint parse_model(unsigned n, const std::string& s) {
  if (n == 3) return model_point3(P2Point::parse(s));
  if (n == 4) {
    auto close = s.find(']');
    auto comma = s.find(',', close == std::string::npos ? 0 : close);
    if (close == std::string::npos || comma == std::string::npos)
      throw Error(ErrorCode::Parse, "n = 4 expects \"[a1:a2],x\"");
    return model_point4(P1Point::parse(s.substr(0, close + 1)), Rational::parse(s.substr(comma + 1)));
  }
  auto coords = parse_rationals(s);
  if (coords.size() + 3 != n)
    throw Error(ErrorCode::InvalidArgument,
                "M_2(" + std::to_string(n) + ") needs " + std::to_string(n - 3) + " coordinates");
  return model_point(std::move(coords));
}

std::string verified(bool ok) { return ok ? "verified" : "FAILED"; }

}  // namespace

extern "C" {

const char* hxc_version(void) { return "0.1.0"; }

const char* hxc_status_string(hxc_status status) {
  switch (status) {
    case HXC_OK: return "ok";
    case HXC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HXC_ERR_PARSE: return "parse error";
    case HXC_ERR_DIVISION_BY_ZERO: return "division by zero";
    case HXC_ERR_ZERO_POINT: return "all-zero projective point";
    case HXC_ERR_MISSING_VARIABLE: return "missing variable";
    case HXC_ERR_DEGENERATE_MAP: return "degenerate map";
    case HXC_ERR_NOT_MINIMAL_PERIOD: return "period divides n properly";
    case HXC_ERR_NOT_ON_SURFACE: return "point not on the surface";
    case HXC_ERR_BOUNDARY: return "boundary point";
    case HXC_ERR_OUTSIDE_CHART: return "outside chart";
    case HXC_ERR_EXCLUDED_PARAMETER: return "parameter excluded";
    case HXC_ERR_IO: return "i/o failure";
    case HXC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int hxc_status_is_rejection(hxc_status status) {
  switch (status) {
    case HXC_ERR_DIVISION_BY_ZERO:
    case HXC_ERR_DEGENERATE_MAP:
    case HXC_ERR_NOT_MINIMAL_PERIOD:
    case HXC_ERR_NOT_ON_SURFACE:
    case HXC_ERR_BOUNDARY:
    case HXC_ERR_OUTSIDE_CHART:
    case HXC_ERR_EXCLUDED_PARAMETER:
      return 1;
    default:
      return 0;
  }
}

const char* hxc_result_text(const hxc_result* result) { return result ? result->text.c_str() : ""; }
const char* hxc_result_summary(const hxc_result* result) {
  return result ? result->summary.c_str() : "";
}
int hxc_result_passed(const hxc_result* result) { return result && result->passed ? 1 : 0; }
void hxc_result_free(hxc_result* result) { delete result; }

hxc_status hxc_verify(uint64_t seed, hxc_result** out) {
  return run(out, [&] {
    auto ids = verify_identities(seed);
    auto sing = singular_points_check();
    auto contain = io::boundary_containment_json(10);
    auto pref = prefactor_report();
    std::size_t ids_ok = 0, comps_ok = 0;
    for (const auto& r : ids) ids_ok += r.verified;
    for (const auto& c : contain) comps_ok += c["status"] == "verified";
    bool all = ids_ok == ids.size() && sing.ok && comps_ok == contain.size();
    g_passed = all;
    json doc{{"seed", seed},
             {"status", all ? "verified" : "failed"},
             {"identities", io::encode(ids)},
             {"singular_points", io::encode(sing)},
             {"boundary_containment", contain},
             {"genus0_prefactors", io::encode(pref)}};
    std::string summary = std::to_string(ids_ok) + "/" + std::to_string(ids.size()) +
                          " identity records verified; singular points " + verified(sing.ok) +
                          "; " + std::to_string(comps_ok) + "/" + std::to_string(contain.size()) +
                          " boundary curves on S6";
    return std::pair{doc.dump(2), summary};
  });
}

hxc_status hxc_map_from_surface(const char* point, hxc_result** out) {
  return run(out, [&] {
    P3Point p = P3Point::parse(require(point, "point"));
    MarkedCycle mc = point_to_endomorphism(p);
    auto xyz = phi_inverse(p);
    json prov{{"family", "surface"},
              {"surface_point", p.str()},
              {"model_point", io::encode(model_point({xyz[0], xyz[1], xyz[2]}))}};
    return std::pair{io::encode(mc, prov).dump(), "6-cycle of " + mc.map.coeffs().str()};
  });
}

hxc_status hxc_map_from_elliptic(long n_first, long n_last, const char* slice, int torsion,
                                 hxc_result** out) {
  return run(out, [&] {
    Slice s = parse_slice(slice ? slice : "Z0");
    if (n_last < n_first) throw Error(ErrorCode::InvalidArgument, "empty range of n");
    if (n_first == n_last) {
      auto m = elliptic_family_map(n_first, s, torsion);
      return std::pair{io::encode(m).dump(), "n=" + std::to_string(n_first) + ": " +
                                                 m.cycle.map.coeffs().str()};
    }
    std::string text;
    std::size_t ok = 0, excluded = 0;
    for (long n = n_first; n <= n_last; ++n) {
      try {
        text += io::encode(elliptic_family_map(n, s, torsion)).dump() + "\n";
        ++ok;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ExcludedParameter) throw;
        json line{{"provenance", {{"family", std::string("elliptic-slice-") + slice_name(s)},
                                  {"n", n},
                                  {"torsion", torsion}}},
                  {"excluded", e.what()}};
        text += line.dump() + "\n";
        ++excluded;
      }
    }
    return std::pair{text, std::to_string(ok) + " maps, " + std::to_string(excluded) + " excluded"};
  });
}

hxc_status hxc_map_from_family(const char* params, hxc_result** out) {
  return run(out, [&] {
    auto ps = parse_rationals(require(params, "p"));
    if (ps.size() == 1) {
      auto m = genus0_family(ps[0]);
      return std::pair{io::encode(m).dump(), "p=" + ps[0].str() + ": " + m.cycle.map.coeffs().str()};
    }
    std::string text;
    std::size_t ok = 0, excluded = 0;
    for (const auto& p : ps) {
      try {
        text += io::encode(genus0_family(p)).dump() + "\n";
        ++ok;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ExcludedParameter) throw;
        json line{{"provenance", {{"family", "genus0-p"}, {"p", p.str()}}}, {"excluded", e.what()}};
        text += line.dump() + "\n";
        ++excluded;
      }
    }
    return std::pair{text, std::to_string(ok) + " maps, " + std::to_string(excluded) + " excluded"};
  });
}

hxc_status hxc_orbit(const char* map, const char* start, size_t steps, hxc_result** out) {
  return run(out, [&] {
    QuadMap f(ProjPoint<5>::parse(require(map, "map")));
    P1Point p = P1Point::parse(require(start, "start"));
    auto r = orbit(f, p, steps);
    std::string summary = r.cycle_found ? "preperiod " + std::to_string(r.preperiod) + ", period " +
                                              std::to_string(r.period)
                                        : "no repetition after " + std::to_string(steps) + " steps";
    return std::pair{io::encode(r).dump(), summary};
  });
}

hxc_status hxc_cycle_to_map(const char* points, hxc_result** out) {
  return run(out, [&] {
    std::vector<P1Point> pts;
    for (const auto& g : bracket_groups(require(points, "points"))) pts.push_back(P1Point::parse(g));
    MarkedCycle mc = cycle_to_endomorphism(pts);
    return std::pair{io::encode(mc).dump(), mc.map.coeffs().str()};
  });
}

hxc_status hxc_sigma(unsigned n, const char* coords, hxc_result** out) {
  return run(out, [&] {
    ModelPoint p = parse_model(n, require(coords, "coords"));
    ModelPoint q = sigma_action(p);
    json doc{{"n", n}, {"input", io::encode(p)}, {"image", io::encode(q)}};
    return std::pair{doc.dump(), "sigma_" + std::to_string(n) + " applied"};
  });
}

hxc_status hxc_sigma_surface(const char* point, hxc_result** out) {
  return run(out, [&] {
    P3Point p = P3Point::parse(require(point, "point"));
    json orbit_pts = json::array();
    P3Point q = p;
    for (int i = 0; i < 6; ++i) {
      orbit_pts.push_back(q.str());
      q = sigma6_surface(q);
    }
    json doc{{"input", p.str()}, {"image", sigma6_surface(p).str()}, {"orbit", orbit_pts}};
    return std::pair{doc.dump(), sigma6_surface(p).str()};
  });
}

hxc_status hxc_membership(unsigned n, const char* coords, hxc_result** out) {
  return run(out, [&] {
    auto xs = parse_rationals(require(coords, "coords"));
    auto m = membership(n, xs);
    json doc{{"n", n}, {"coords", json::array()}, {"inside", m.inside}};
    for (const auto& x : xs) doc["coords"].push_back(x.str());
    if (!m.inside) doc["reason"] = m.reason;
    return std::pair{doc.dump(), m.inside ? std::string("inside") : "outside: " + m.reason};
  });
}

hxc_status hxc_surface_membership(const char* point, hxc_result** out) {
  return run(out, [&] {
    P3Point p = P3Point::parse(require(point, "point"));
    auto m = s6_membership(p);
    json doc{{"point", p.str()}, {"inside", m.inside}, {"components", m.components}};
    if (!m.inside) doc["reason"] = m.reason;
    return std::pair{doc.dump(), m.inside ? std::string("inside") : "boundary: " + m.reason};
  });
}

hxc_status hxc_classify(const char* point, hxc_result** out) {
  return run(out, [&] {
    P3Point p = P3Point::parse(require(point, "point"));
    Classification c = classify_point(p);
    P3Point rep = orbit_representative(p);
    json doc{{"point", p.str()},
             {"classification", class_name(c.kind)},
             {"components", c.components},
             {"orbit_rep", rep.str()},
             {"height", p.height().get_str()}};
    return std::pair{doc.dump(), c.label()};
  });
}

hxc_status hxc_fermat_points(long height, hxc_result** out) {
  return run(out, [&] {
    auto pts = fermat_curve_points(height);
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(p.str());
    json doc{{"height", height}, {"points", arr}};
    return std::pair{doc.dump(), std::to_string(pts.size()) + " points up to height " +
                                     std::to_string(height)};
  });
}

hxc_search_config* hxc_search_config_new(void) { return new hxc_search_config; }
void hxc_search_config_free(hxc_search_config* config) { delete config; }

hxc_status hxc_search_config_set_height(hxc_search_config* config, long height) {
  if (!config || height < 1 || height > kMaxSearchHeight) return HXC_ERR_INVALID_ARGUMENT;
  config->options.height = height;
  return HXC_OK;
}

hxc_status hxc_search_config_set_shards(hxc_search_config* config, unsigned shards) {
  if (!config || shards < 1 || shards > 256) return HXC_ERR_INVALID_ARGUMENT;
  config->options.shards = shards;
  return HXC_OK;
}

hxc_status hxc_search_config_set_sieve_mods(hxc_search_config* config, const unsigned* mods,
                                            size_t count) {
  if (!config || (count > 0 && !mods)) return HXC_ERR_INVALID_ARGUMENT;
  for (size_t i = 0; i < count; ++i)
    if (mods[i] < 2 || mods[i] > 64) return HXC_ERR_INVALID_ARGUMENT;
  config->options.sieve_mods.assign(mods, mods + count);
  return HXC_OK;
}

hxc_status hxc_search_config_set_range(hxc_search_config* config, char axis, long lo, long hi) {
  if (!config || lo > hi) return HXC_ERR_INVALID_ARGUMENT;
  auto range = std::make_pair(lo, hi);
  switch (axis) {
    case 'X': case 'x': config->options.x_range = range; break;
    case 'Y': case 'y': config->options.y_range = range; break;
    case 'Z': case 'z': config->options.z_range = range; break;
    default: return HXC_ERR_INVALID_ARGUMENT;
  }
  return HXC_OK;
}

hxc_status hxc_search(const hxc_search_config* config, hxc_format format, hxc_result** out) {
  return run(out, [&] {
    if (!config) throw Error(ErrorCode::InvalidArgument, "search config is required");
    auto res = search_surface(config->options);
    std::string text;
    if (format == HXC_FORMAT_CSV) {
      text = io::csv_header() + "\n";
      for (const auto& r : res.records) text += io::to_csv(r) + "\n";
    } else if (format == HXC_FORMAT_JSON) {
      json arr = json::array();
      for (const auto& r : res.records) arr.push_back(io::encode(r));
      text = arr.dump() + "\n";
    } else {
      for (const auto& r : res.records) text += io::encode(r).dump() + "\n";
    }
    std::size_t sporadic = 0;
    for (const auto& r : res.records) sporadic += r.classification.kind == PointClass::Sporadic;
    std::string summary = std::to_string(res.records.size()) + " orbits (" +
                          std::to_string(sporadic) + " sporadic) up to height " +
                          std::to_string(config->options.height) + "; " +
                          std::to_string(res.stats.triples) + " triples, " +
                          std::to_string(res.stats.sieved_out) + " removed by the sieve";
    return std::pair{text, summary};
  });
}

}  // extern "C"
