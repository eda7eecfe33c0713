#include <doctest.h>

#include <numeric>
#include <set>

#include "gen.hpp"
#include "hexacycle/error.hpp"
#include "hexacycle/families.hpp"
#include "hexacycle/search.hpp"
#include "hexacycle/surface.hpp"

using namespace hexacycle;

namespace {

P3Point sp(const char* s) { return P3Point::parse(s); }

// Brute force over all of [-h, h]^4, in plain machine integers.
std::set<P3Point> naive_orbits(long h) {
  std::set<P3Point> out;
  for (long w = -h; w <= h; ++w)
    for (long x = -h; x <= h; ++x)
      for (long y = -h; y <= h; ++y)
        for (long z = -h; z <= h; ++z) {
          long first = w ? w : (x ? x : (y ? y : z));
          if (first <= 0) continue;
          if (std::gcd(std::gcd(w, x), std::gcd(y, z)) != 1) continue;
          long s = x + y + z;
          long f3 = s * s * s + x * x * z + x * y * y + y * z * z + 2 * x * y * z;
          long f5 = z * z * z * x * x + x * x * x * y * y + y * y * y * z * z -
                    x * y * z * (y * z + x * y + x * z);
          if (w * w * f3 != f5) continue;
          P3Point p = P3Point::from_integers({w, x, y, z});
          P3Point best = p;
          for (int k = 0; k < 5; ++k) {
            p = sigma6_surface(p);
            best = std::min(best, p);
          }
          out.insert(best);
        }
  return out;
}

std::vector<std::string> rendered(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& rec : r.records)
    out.push_back(rec.point.str() + " " + rec.classification.label() + " " + rec.height.get_str());
  return out;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify_point(sp("[8/13:-4/7:1:0]")).kind == PointClass::SliceZ0);
  CHECK(classify_point(sp("[62257:-75523:54607:72443]")).kind == PointClass::Sporadic);
  CHECK(classify_point(sp("[16685:-46572:20403:35913]")).kind == PointClass::Sporadic);
  auto b = classify_point(sp("[5:1:1:-1]"));
  CHECK(b.kind == PointClass::Boundary);
  CHECK(b.label() == "boundary(L9)");
  CHECK(classify_point(elliptic_family_map(3, Slice::X0).surface_point).kind == PointClass::SliceX0);
  CHECK(classify_point(elliptic_family_map(3, Slice::Y0).surface_point).kind == PointClass::SliceY0);
  CHECK(classify_point(cubic_curve_surface_point(Rational(3))).kind == PointClass::CubicCurveC);
}

TEST_CASE("orbit representatives") {
  testgen::Gen g(61);
  for (int i = 0; i < 40; ++i) {
    P3Point p = P3Point::from_rationals({g.rational(9), g.rational(9), g.rational(9), g.nonzero_rational(9)});
    P3Point rep = orbit_representative(p);
    CHECK(orbit_representative(sigma6_surface(p)) == rep);
    CHECK(rep <= p);
  }
}

TEST_CASE("sieve soundness") {
  const std::vector<P3Point> on{sp("[16685:-46572:20403:35913]"), sp("[62257:-75523:54607:72443]"),
                                sp("[56:-52:91:0]"), sp("[5:1:1:-1]")};
  for (const auto& p : on)
    for (unsigned m : {2u, 3u, 5u, 7u, 8u, 9u, 11u, 13u, 64u}) {
      std::array<std::int64_t, 4> r;
      for (int i = 0; i < 4; ++i) r[i] = BigInt(p[i] % m).get_si();
      CHECK(sieve_filter(r, m));
    }
  CHECK_THROWS_AS(sieve_filter({0, 0, 0, 0}, 1), Error);

  // rejection rate on random off-surface points (measured, not asserted)
  testgen::Gen g(62);
  int off = 0, rejected = 0;
  for (int i = 0; i < 2000; ++i) {
    std::array<std::int64_t, 4> r{g.integer(-99, 99), g.integer(-99, 99), g.integer(-99, 99), g.integer(-99, 99)};
    if (on_surface(P3Point::from_integers({r[0], r[1], r[2], r[3]})).on_surface) continue;
    ++off;
    for (unsigned m : {5u, 7u, 9u, 11u})
      if (!sieve_filter(r, m)) {
        ++rejected;
        break;
      }
  }
  MESSAGE("sieve {5,7,9,11} rejects " << rejected << " of " << off << " off-surface points");
}

TEST_CASE("search at height 1") {
  SearchOptions o;
  o.height = 1;
  auto r = search_surface(o);
  bool has = false;
  P3Point target = orbit_representative(sp("[1:1:1:-1]"));
  for (const auto& rec : r.records) {
    CHECK(rec.classification.kind != PointClass::Sporadic);
    has = has || rec.point == target;
    if (rec.point == target) CHECK(rec.classification.kind == PointClass::Boundary);
  }
  CHECK(has);
}

TEST_CASE("search matches brute force at height 8") {
  SearchOptions o;
  o.height = 8;
  auto r = search_surface(o);
  std::set<P3Point> found;
  for (const auto& rec : r.records) {
    CHECK(rec.point == rec.orbit_rep);
    CHECK(on_surface(rec.point).on_surface);
    found.insert(rec.point);
  }
  CHECK(found.size() == r.records.size());
  CHECK(found == naive_orbits(8));

  // no sieve at all gives the same answer
  o.sieve_mods.clear();
  auto plain = search_surface(o);
  CHECK(rendered(plain) == rendered(r));
  CHECK(plain.stats.sieved_out == 0);
}

TEST_CASE("search output does not depend on the shard count") {
  SearchOptions o;
  o.height = 10;
  auto one = rendered(search_surface(o));
  for (unsigned s : {2u, 4u, 8u}) {
    o.shards = s;
    CHECK(rendered(search_surface(o)) == one);
  }
}

TEST_CASE("records are sorted by height then representative") {
  SearchOptions o;
  o.height = 6;
  auto r = search_surface(o);
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    const auto &a = r.records[i - 1], &b = r.records[i];
    CHECK((a.height < b.height || (a.height == b.height && a.orbit_rep < b.orbit_rep)));
  }
}

TEST_CASE("a box search finds the sporadic point") {
  SearchOptions o;
  o.height = 50000;
  o.x_range = {{-46572, -46572}};
  o.y_range = {{20403, 20403}};
  o.z_range = {{35913, 35913}};
  auto r = search_surface(o);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].orbit_rep == orbit_representative(sp("[16685:-46572:20403:35913]")));
  CHECK(r.records[0].classification.kind == PointClass::Sporadic);
}

TEST_CASE("search argument checks") {
  SearchOptions o;
  o.height = 0;
  CHECK_THROWS_AS(search_surface(o), Error);
  o.height = kMaxSearchHeight + 1;
  CHECK_THROWS_AS(search_surface(o), Error);
  o.height = 3;
  o.shards = 0;
  CHECK_THROWS_AS(search_surface(o), Error);
  o.shards = 1;
  o.sieve_mods = {1};
  CHECK_THROWS_AS(search_surface(o), Error);
}
