// Runs the installed command-line tool as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#ifndef HXC_CLI_PATH
#error "HXC_CLI_PATH must point at the built tool"
#endif

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  fs::path dir = fs::temp_directory_path();
  fs::path out = dir / "hxc_cli_test.out", err = dir / "hxc_cli_test.err";
  std::string cmd = std::string(HXC_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  int raw = std::system(cmd.c_str());
  int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("map-from-elliptic --n 2 prints the worked example") {
  auto r = run("map-from-elliptic --n 2");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["map"]["coeffs"] == json::array({"2527", "4655", "-43218", "2527", "-10051", "0"}));
  CHECK(j["cycle"][5] == "[98:-19]");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify exits 0 and is reproducible") {
  auto a = run("verify");
  auto b = run("verify --seed 0");
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["status"] == "verified");
  CHECK(a.out == b.out);
  auto c = run("--seed 5 verify");
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["seed"] == 5);
}

TEST_CASE("orbit of the example map") {
  auto r = run("orbit --map '[2527:4655:-43218:2527:-10051:0]' --start '[0:1]' --steps 12");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["period"] == 6);
  CHECK(j["preperiod"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("map-from-elliptic --n 1").code == 1);
  CHECK(run("map-from-surface --point '[5:1:1:-1]'").code == 1);
  auto rej = run("map-from-family --p 0");
  CHECK(rej.code == 1);
  CHECK(json::parse(rej.out)["error"]["code"] == "excluded-parameter");
  CHECK(run("no-such-command").code == 2);
  CHECK(run("search").code == 2);
  CHECK(run("search --height 0").code == 2);
  CHECK(run("sigma --n 6").code == 2);
  CHECK(run("classify --point '[1:2'").code == 2);
  CHECK(run("search --height 2 --out /nonexistent-dir/x.csv").code == 3);
}

TEST_CASE("search writes csv and json lines") {
  fs::path csv = fs::temp_directory_path() / "hxc_cli_search.csv";
  auto r = run("search --height 8 --shards 4 --format csv --out " + csv.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::string text = slurp(csv);
  CHECK(text.rfind("height,orbit_rep,classification,W,X,Y,Z\n", 0) == 0);

  auto one = run("search --height 8 --shards 1");
  auto eight = run("search --height 8 --shards 8");
  CHECK(one.out == eight.out);
  std::istringstream in(one.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    json j = json::parse(line);
    CHECK(j.contains("orbit_rep"));
    ++n;
  }
  std::size_t csv_rows = 0;
  for (char ch : text) csv_rows += ch == '\n';
  CHECK(n + 1 == csv_rows);
}

TEST_CASE("the remaining subcommands") {
  CHECK(json::parse(run("map-from-family --p 2").out)["provenance"]["fixed_point"] == "[1:3]");
  CHECK(json::parse(run("sigma --surface '[56:-52:91:0]'").out)["image"] == "[56:-91:0:52]");
  CHECK(json::parse(run("membership --n 6 --coords 91/19,49/13,-98/19").out)["inside"] == true);
  CHECK(json::parse(run("classify --point '[16685:-46572:20403:35913]'").out)["classification"] ==
        "sporadic");
  CHECK(json::parse(run("fermat-points --height 10").out)["points"].size() == 3);
  CHECK(json::parse(run("map-from-cycle --points '[0:1],[1:0],[1:1],[91:19],[49:13],[-98:19]'").out)["map"]["coeffs"][0] ==
        "2527");
  auto lines = run("map-from-elliptic --n 2 --to 6 --slice Y0 --torsion 2");
  CHECK(lines.code == 0);
  std::size_t count = 0;
  for (char ch : lines.out) count += ch == '\n';
  CHECK(count == 5);
}
