#include <doctest.h>

#include "gen.hpp"
#include "hexacycle/error.hpp"
#include "hexacycle/serialize.hpp"

using namespace hexacycle;
using io::json;

TEST_CASE("quadratic maps round-trip through json") {
  QuadMap f(ProjPoint<5>::parse(testgen::kExampleMap));
  json j = io::encode(f);
  CHECK(j.dump() == R"({"coeffs":["2527","4655","-43218","2527","-10051","0"]})");
  CHECK(io::quadmap_from_json(j) == f);
  CHECK(io::quadmap_from_json(json::parse(j.dump())) == f);

  // scaled or sign-flipped coefficients are not canonical
  CHECK_THROWS_AS(io::quadmap_from_json(json::parse(R"({"coeffs":["-2527","-4655","43218","-2527","10051","0"]})")),
                  Error);
  CHECK_THROWS_AS(io::quadmap_from_json(json::parse(R"({"coeffs":["1","2"]})")), Error);
  CHECK_THROWS_AS(io::quadmap_from_json(json::parse(R"({"coeffs":[1,0,0,0,0,1]})")), Error);
  CHECK_THROWS_AS(io::quadmap_from_json(json::parse(R"({"map":{}})")), Error);
}

TEST_CASE("marked cycles round-trip through json") {
  testgen::Gen g(71);
  for (int i = 0; i < 20; ++i) {
    MarkedCycle mc = model_marked_cycle(g.admissible6());
    json j = io::encode(mc, json{{"family", "test"}});
    MarkedCycle back = io::marked_cycle_from_json(json::parse(j.dump()));
    CHECK(back.map == mc.map);
    CHECK(back.points == mc.points);
    CHECK(j["provenance"]["family"] == "test");
  }
  // a cycle that is not a cycle of the map is refused
  json bad = io::encode(model_marked_cycle(model_point({Rational(91, 19), Rational(49, 13), Rational(-98, 19)})));
  bad["cycle"][3] = "[1:2]";
  CHECK_THROWS_AS(io::marked_cycle_from_json(bad), Error);
}

TEST_CASE("model points round-trip through json") {
  testgen::Gen g(72);
  std::vector<ModelPoint> pts{model_point3(P2Point::parse("[1:2:3]")),
                              model_point4(P1Point::parse("[2:-5]"), Rational(7, 3)),
                              model_point(g.admissible5(9)), g.admissible6()};
  for (const auto& p : pts) {
    json j = io::encode(p);
    CHECK(io::model_point_from_json(json::parse(j.dump())) == p);
  }
  json wrong = io::encode(pts[3]);
  wrong["n"] = 7;
  CHECK_THROWS_AS(io::model_point_from_json(wrong), Error);
}

TEST_CASE("search records round-trip through json and csv") {
  SearchOptions o;
  o.height = 4;
  auto r = search_surface(o);
  REQUIRE_FALSE(r.records.empty());
  for (const auto& rec : r.records) {
    json j = io::encode(rec);
    SearchRecord back = io::search_record_from_json(json::parse(j.dump()));
    CHECK(back.point == rec.point);
    CHECK(back.orbit_rep == rec.orbit_rep);
    CHECK(back.height == rec.height);
    CHECK(back.classification == rec.classification);
    CHECK(j["height"].is_string());
  }
  CHECK(io::csv_header() == "height,orbit_rep,classification,W,X,Y,Z");
  SearchRecord rec{P3Point::parse("[5:1:1:-1]"), classify_point(P3Point::parse("[5:1:1:-1]")),
                   P3Point::parse("[5:1:1:-1]"), 5};
  CHECK(io::to_csv(rec) == "5,[5:1:1:-1],boundary(L9),5,1,1,-1");
}

TEST_CASE("reports serialize with exact values as strings") {
  json ids = io::encode(verify_identities());
  for (const auto& r : ids) CHECK(r["status"] == "verified");
  json pref = io::encode(prefactor_report());
  for (const auto& s : pref["samples"]) CHECK(s.is_string());
  json cat = io::boundary_catalog_json();
  CHECK(cat.size() == 23);
  CHECK(cat[0]["equations"].size() == 2);
  json fam = io::encode(genus0_family(Rational(1, 2)));
  CHECK(fam["provenance"]["p"] == "1/2");
  json ell = io::encode(elliptic_family_map(2));
  CHECK(ell["provenance"]["curve_point"] == "(-7/4, 13/8)");
  CHECK(ell["provenance"]["surface_point"] == "[56:-52:91:0]");
  CHECK(io::error_json("boundary", "x").dump() == R"({"error":{"code":"boundary","message":"x"}})");
}
