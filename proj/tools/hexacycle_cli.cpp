// Command-line front end; everything goes through the C API.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hexacycle/hexacycle.h"

namespace {

enum Exit { kOk = 0, kRejected = 1, kUsage = 2, kIo = 3, kInternal = 4 };

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

int exit_for(hxc_status s) {
  if (s == HXC_OK) return kOk;
  if (hxc_status_is_rejection(s)) return kRejected;
  if (s == HXC_ERR_IO) return kIo;
  if (s == HXC_ERR_INTERNAL) return kInternal;
  return kUsage;
}

int emit(const Common& common, hxc_status status, hxc_result* result) {
  std::string text = hxc_result_text(result);
  std::string summary = hxc_result_summary(result);
  bool passed = hxc_result_passed(result) != 0;
  hxc_result_free(result);
  if (!text.empty() && text.back() != '\n') text += '\n';
  std::cerr << summary << '\n';
  if (status != HXC_OK) {
    std::cout << text;
    return exit_for(status);
  }
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!(f << text) || !f.flush()) {
      std::cerr << "cannot write " << common.out << '\n';
      return kIo;
    }
  }
  return passed ? kOk : kRejected;
}

bool parse_range(const std::string& s, long& lo, long& hi) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t a = 0, b = 0;
    lo = std::stol(s.substr(0, colon), &a);
    hi = std::stol(s.substr(colon + 1), &b);
    return a == colon && b == s.size() - colon - 1 && lo <= hi;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic maps with rational 6-cycles and the quintic surface S6"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(hxc_version()));

  Common common;
  app.add_option("--seed", common.seed, "seed for sampled verifications")->capture_default_str();
  app.add_option("--out", common.out, "write data here instead of standard output");
  app.add_option("--format", common.format, "json, jsonl or csv")
      ->check(CLI::IsMember({"json", "jsonl", "csv"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "identity catalog, singular points, boundary curves");

  std::string surface_point;
  auto* from_surface = app.add_subcommand("map-from-surface", "marked map of a point of S6");
  from_surface->add_option("--point", surface_point, "[W:X:Y:Z]")->required();

  long n_first = 2;
  std::optional<long> n_last;
  std::string slice = "Z0";
  int torsion = 0;
  auto* from_elliptic = app.add_subcommand("map-from-elliptic", "maps from multiples on E");
  from_elliptic->add_option("--n", n_first, "multiple of (0,1)")->required();
  from_elliptic->add_option("--to", n_last, "last multiple; emits JSON lines");
  from_elliptic->add_option("--slice", slice, "Z0, X0 or Y0")->capture_default_str();
  from_elliptic->add_option("--torsion", torsion, "add this multiple of (-1,1)")
      ->check(CLI::Range(0, 2));

  std::string family_p;
  auto* from_family = app.add_subcommand("map-from-family", "genus-0 family with a fixed point");
  from_family->add_option("--p", family_p, "rational parameter, or a comma-separated list")
      ->required();

  std::string cycle_points;
  auto* from_cycle = app.add_subcommand("map-from-cycle", "the map realizing six points as a cycle");
  from_cycle->add_option("--points", cycle_points, "[u:v],[u:v],... (six points)")->required();

  std::string map_text, start_text;
  std::size_t steps = 12;
  auto* orbit = app.add_subcommand("orbit", "iterate a quadratic map");
  orbit->add_option("--map", map_text, "[a0:a1:a2:a3:a4:a5]")->required();
  orbit->add_option("--start", start_text, "[u:v]")->required();
  orbit->add_option("--steps", steps)->capture_default_str()->check(CLI::PositiveNumber);

  unsigned sigma_n = 6;
  std::string sigma_coords, sigma_surface;
  auto* sigma = app.add_subcommand("sigma", "cyclic shift of the marked cycle");
  sigma->add_option("--n", sigma_n)->capture_default_str()->check(CLI::Range(3, 6));
  auto* sc = sigma->add_option("--coords", sigma_coords, "model coordinates");
  auto* ss = sigma->add_option("--surface", sigma_surface, "[W:X:Y:Z]");
  sc->excludes(ss);

  unsigned mem_n = 6;
  std::string mem_coords, mem_surface;
  auto* member = app.add_subcommand("membership", "is a point in M_2(n)?");
  member->add_option("--n", mem_n)->capture_default_str()->check(CLI::Range(5, 64));
  auto* mc = member->add_option("--coords", mem_coords, "x1,...,x_{n-3}");
  auto* ms = member->add_option("--surface", mem_surface, "[W:X:Y:Z]");
  mc->excludes(ms);

  long height = 1;
  unsigned shards = 1;
  std::vector<unsigned> sieve_mods{5, 7, 9, 11};
  std::string x_range, y_range, z_range;
  auto* search = app.add_subcommand("search", "rational points of S6 up to a height");
  search->add_option("--height", height)->required()->check(CLI::Range(1L, 10000000L));
  search->add_option("--shards", shards)->capture_default_str()->check(CLI::Range(1u, 256u));
  search->add_option("--sieve-mods", sieve_mods)->delimiter(',')->capture_default_str();
  search->add_option("--x-range", x_range, "lo:hi");
  search->add_option("--y-range", y_range, "lo:hi");
  search->add_option("--z-range", z_range, "lo:hi");

  std::string classify_point;
  auto* classify = app.add_subcommand("classify", "which known curve carries a point of S6");
  classify->add_option("--point", classify_point, "[W:X:Y:Z]")->required();

  long fermat_height = 50;
  auto* fermat = app.add_subcommand("fermat-points", "points of y^2 z = 4x^3 + z^3");
  fermat->add_option("--height", fermat_height)->capture_default_str()->check(CLI::Range(1L, 1000000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if ((*sigma && sigma_coords.empty() && sigma_surface.empty()) ||
      (*member && mem_coords.empty() && mem_surface.empty())) {
    std::cerr << "one of --coords or --surface is required\n";
    return kUsage;
  }

  hxc_result* result = nullptr;
  hxc_status status = HXC_OK;

  if (*verify) {
    status = hxc_verify(common.seed, &result);
  } else if (*from_surface) {
    status = hxc_map_from_surface(surface_point.c_str(), &result);
  } else if (*from_elliptic) {
    status = hxc_map_from_elliptic(n_first, n_last.value_or(n_first), slice.c_str(), torsion,
                                   &result);
  } else if (*from_family) {
    status = hxc_map_from_family(family_p.c_str(), &result);
  } else if (*from_cycle) {
    status = hxc_cycle_to_map(cycle_points.c_str(), &result);
  } else if (*orbit) {
    status = hxc_orbit(map_text.c_str(), start_text.c_str(), steps, &result);
  } else if (*sigma) {
    status = sigma_surface.empty() ? hxc_sigma(sigma_n, sigma_coords.c_str(), &result)
                                   : hxc_sigma_surface(sigma_surface.c_str(), &result);
  } else if (*member) {
    status = mem_surface.empty() ? hxc_membership(mem_n, mem_coords.c_str(), &result)
                                 : hxc_surface_membership(mem_surface.c_str(), &result);
  } else if (*search) {
    hxc_search_config* cfg = hxc_search_config_new();
    bool ok = hxc_search_config_set_height(cfg, height) == HXC_OK &&
              hxc_search_config_set_shards(cfg, shards) == HXC_OK &&
              hxc_search_config_set_sieve_mods(cfg, sieve_mods.data(), sieve_mods.size()) == HXC_OK;
    const std::pair<char, const std::string*> ranges[] = {{'X', &x_range}, {'Y', &y_range},
                                                          {'Z', &z_range}};
    for (const auto& [axis, text] : ranges) {
      if (!ok || text->empty()) continue;
      long lo = 0, hi = 0;
      ok = parse_range(*text, lo, hi) && hxc_search_config_set_range(cfg, axis, lo, hi) == HXC_OK;
    }
    if (!ok) {
      hxc_search_config_free(cfg);
      std::cerr << "invalid search configuration\n" << app.help();
      return kUsage;
    }
    hxc_format fmt = common.format == "csv" ? HXC_FORMAT_CSV : HXC_FORMAT_JSONL;
    status = hxc_search(cfg, fmt, &result);
    hxc_search_config_free(cfg);
  } else if (*classify) {
    status = hxc_classify(classify_point.c_str(), &result);
  } else if (*fermat) {
    status = hxc_fermat_points(fermat_height, &result);
  }
  return emit(common, status, result);
}
