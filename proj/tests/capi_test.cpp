// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "hexacycle/hexacycle.h"

using nlohmann::json;

namespace {

struct Result {
  hxc_status status;
  std::string text;
  std::string summary;
  bool passed;
};

template <class Fn>
Result call(Fn&& fn) {
  hxc_result* r = nullptr;
  hxc_status s = fn(&r);
  REQUIRE(r != nullptr);
  Result out{s, hxc_result_text(r), hxc_result_summary(r), hxc_result_passed(r) != 0};
  hxc_result_free(r);
  return out;
}

}  // namespace

TEST_CASE("status strings") {
  CHECK(std::string(hxc_version()).size() > 0);
  CHECK(std::string(hxc_status_string(HXC_OK)) == "ok");
  CHECK(std::string(hxc_status_string(HXC_ERR_BOUNDARY)) == "boundary point");
  CHECK(hxc_status_is_rejection(HXC_ERR_EXCLUDED_PARAMETER));
  CHECK(hxc_status_is_rejection(HXC_ERR_BOUNDARY));
  CHECK_FALSE(hxc_status_is_rejection(HXC_ERR_PARSE));
  CHECK_FALSE(hxc_status_is_rejection(HXC_OK));
  CHECK(std::string(hxc_result_text(nullptr)).empty());
  hxc_result_free(nullptr);
}

TEST_CASE("verify") {
  auto r = call([](hxc_result** o) { return hxc_verify(0, o); });
  CHECK(r.status == HXC_OK);
  CHECK(r.passed);
  json doc = json::parse(r.text);
  CHECK(doc["status"] == "verified");
  CHECK(doc["seed"] == 0);
  CHECK(doc["boundary_containment"].size() == 23);
  CHECK(doc["singular_points"]["points"].size() == 11);
  auto again = call([](hxc_result** o) { return hxc_verify(0, o); });
  CHECK(again.text == r.text);
}

TEST_CASE("worked example through the C API") {
  auto r = call([](hxc_result** o) { return hxc_map_from_elliptic(2, 2, "Z0", 0, o); });
  REQUIRE(r.status == HXC_OK);
  json doc = json::parse(r.text);
  CHECK(doc["map"]["coeffs"] == json::array({"2527", "4655", "-43218", "2527", "-10051", "0"}));
  CHECK(doc["cycle"] == json::array({"[0:1]", "[1:0]", "[1:1]", "[91:19]", "[49:13]", "[98:-19]"}));
  CHECK(doc["provenance"]["model_point"]["coords"] == json::array({"91/19", "49/13", "-98/19"}));

  auto s = call([](hxc_result** o) { return hxc_map_from_surface("[8/13:-4/7:1:0]", o); });
  CHECK(json::parse(s.text)["map"] == doc["map"]);

  auto c = call([](hxc_result** o) {
    return hxc_cycle_to_map("[0:1],[1:0],[1:1],[91:19],[49:13],[-98:19]", o);
  });
  CHECK(json::parse(c.text)["map"] == doc["map"]);

  auto orb = call([](hxc_result** o) {
    return hxc_orbit("[2527:4655:-43218:2527:-10051:0]", "[0:1]", 12, o);
  });
  json od = json::parse(orb.text);
  CHECK(od["cycle_found"] == true);
  CHECK(od["period"] == 6);
  CHECK(od["preperiod"] == 0);
}

TEST_CASE("rejections carry structured errors") {
  auto r = call([](hxc_result** o) { return hxc_map_from_elliptic(1, 1, "Z0", 0, o); });
  CHECK(r.status == HXC_ERR_EXCLUDED_PARAMETER);
  json e = json::parse(r.text);
  CHECK(e["error"]["code"] == "excluded-parameter");

  auto b = call([](hxc_result** o) { return hxc_map_from_surface("[5:1:1:-1]", o); });
  CHECK(b.status == HXC_ERR_BOUNDARY);
  auto off = call([](hxc_result** o) { return hxc_map_from_surface("[1:1:1:1]", o); });
  CHECK(off.status == HXC_ERR_NOT_ON_SURFACE);
  auto parse = call([](hxc_result** o) { return hxc_classify("[1:2", o); });
  CHECK(parse.status == HXC_ERR_PARSE);
  auto null = call([](hxc_result** o) { return hxc_classify(nullptr, o); });
  CHECK(null.status == HXC_ERR_INVALID_ARGUMENT);
  auto fam = call([](hxc_result** o) { return hxc_map_from_family("0", o); });
  CHECK(fam.status == HXC_ERR_EXCLUDED_PARAMETER);
  CHECK(hxc_verify(0, nullptr) == HXC_OK);
}

TEST_CASE("ranges list exclusions line by line") {
  auto r = call([](hxc_result** o) { return hxc_map_from_elliptic(1, 4, "Z0", 0, o); });
  CHECK(r.status == HXC_OK);
  std::istringstream in(r.text);
  std::string line;
  int lines = 0, excluded = 0;
  while (std::getline(in, line)) {
    json j = json::parse(line);
    ++lines;
    excluded += j.contains("excluded");
  }
  CHECK(lines == 4);
  CHECK(excluded == 1);

  auto f = call([](hxc_result** o) { return hxc_map_from_family("2,0,1/2", o); });
  CHECK(f.status == HXC_OK);
  CHECK(f.summary == "2 maps, 1 excluded");
}

TEST_CASE("sigma and membership") {
  auto s = call([](hxc_result** o) { return hxc_sigma(6, "91/19,49/13,-98/19", o); });
  CHECK(json::parse(s.text)["image"]["coords"] == json::array({"26/19", "-8/13", "-72/19"}));
  auto s3 = call([](hxc_result** o) { return hxc_sigma(3, "[1:2:3]", o); });
  CHECK(s3.status == HXC_OK);
  auto s4 = call([](hxc_result** o) { return hxc_sigma(4, "[1:2],5", o); });
  CHECK(s4.status == HXC_OK);
  auto bad = call([](hxc_result** o) { return hxc_sigma(6, "1,2", o); });
  CHECK(bad.status == HXC_ERR_INVALID_ARGUMENT);
  auto ss = call([](hxc_result** o) { return hxc_sigma_surface("[56:-52:91:0]", o); });
  CHECK(json::parse(ss.text)["image"] == "[56:-91:0:52]");

  auto m = call([](hxc_result** o) { return hxc_membership(6, "91/19,49/13,-98/19", o); });
  CHECK(json::parse(m.text)["inside"] == true);
  auto out = call([](hxc_result** o) { return hxc_membership(6, "1/2,1/2,3", o); });
  CHECK(json::parse(out.text)["inside"] == false);
  auto sm = call([](hxc_result** o) { return hxc_surface_membership("[5:1:1:-1]", o); });
  CHECK(json::parse(sm.text)["components"] == json::array({"L9"}));
}

TEST_CASE("classify and fermat") {
  auto c = call([](hxc_result** o) { return hxc_classify("[62257:-75523:54607:72443]", o); });
  CHECK(json::parse(c.text)["classification"] == "sporadic");
  auto f = call([](hxc_result** o) { return hxc_fermat_points(50, o); });
  CHECK(json::parse(f.text)["points"] == json::array({"[0:1:-1]", "[0:1:0]", "[0:1:1]"}));
}

TEST_CASE("search configuration") {
  hxc_search_config* cfg = hxc_search_config_new();
  CHECK(hxc_search_config_set_height(cfg, 0) == HXC_ERR_INVALID_ARGUMENT);
  CHECK(hxc_search_config_set_height(cfg, 6) == HXC_OK);
  CHECK(hxc_search_config_set_shards(cfg, 0) == HXC_ERR_INVALID_ARGUMENT);
  const unsigned bad[] = {1};
  CHECK(hxc_search_config_set_sieve_mods(cfg, bad, 1) == HXC_ERR_INVALID_ARGUMENT);
  CHECK(hxc_search_config_set_range(cfg, 'Q', 0, 1) == HXC_ERR_INVALID_ARGUMENT);
  CHECK(hxc_search_config_set_range(cfg, 'X', 2, 1) == HXC_ERR_INVALID_ARGUMENT);

  auto csv = call([&](hxc_result** o) { return hxc_search(cfg, HXC_FORMAT_CSV, o); });
  CHECK(csv.text.rfind("height,orbit_rep,classification,W,X,Y,Z\n", 0) == 0);
  auto jsonl = call([&](hxc_result** o) { return hxc_search(cfg, HXC_FORMAT_JSONL, o); });
  CHECK(hxc_search_config_set_shards(cfg, 4) == HXC_OK);
  auto sharded = call([&](hxc_result** o) { return hxc_search(cfg, HXC_FORMAT_JSONL, o); });
  CHECK(sharded.text == jsonl.text);
  auto arr = call([&](hxc_result** o) { return hxc_search(cfg, HXC_FORMAT_JSON, o); });
  std::size_t lines = 0;
  for (char ch : jsonl.text) lines += ch == '\n';
  CHECK(json::parse(arr.text).size() == lines);
  hxc_search_config_free(cfg);

  auto none = call([](hxc_result** o) { return hxc_search(nullptr, HXC_FORMAT_CSV, o); });
  CHECK(none.status == HXC_ERR_INVALID_ARGUMENT);
}
