#include <doctest.h>

#include "gen.hpp"
#include "hexacycle/endo.hpp"
#include "hexacycle/error.hpp"
#include "hexacycle/families.hpp"

using namespace hexacycle;

namespace {

QuadMap example_map() { return QuadMap(ProjPoint<5>::parse(testgen::kExampleMap)); }

P1Point pt(const char* s) { return P1Point::parse(s); }

std::vector<P1Point> example_cycle() {
  return {pt("[0:1]"), pt("[1:0]"), pt("[1:1]"), pt("[91:19]"), pt("[49:13]"), pt("[-98:19]")};
}

}  // namespace

TEST_CASE("resultant") {
  const std::array<BigInt, 6> squares{1, 0, 0, 0, 0, 1};
  CHECK(resultant(std::span<const BigInt, 6>(squares)) == 1);
  const std::array<BigInt, 6> same{1, 0, 0, 1, 0, 0};
  CHECK(resultant(std::span<const BigInt, 6>(same)) == 0);

  // (19u+98v)(133u-441v) and 19u(133u-529v), expanded by hand.
  const std::array<BigInt, 6> ex{19 * 133, 98 * 133 - 19 * 441, -98 * 441, 19 * 133, -19 * 529, 0};
  CHECK(ex[1] == 4655);
  BigInt r = resultant(std::span<const BigInt, 6>(ex));
  CHECK(r != 0);
  // G = u*(a3 u + a4 v) factors over Z, so up to sign Res(F, G) is F at its
  // roots [0:1] and [-a4:a3].
  BigInt F_at_0 = ex[2];
  BigInt F_at_root = ex[0] * ex[4] * ex[4] - ex[1] * ex[4] * ex[3] + ex[2] * ex[3] * ex[3];
  CHECK(abs(r) == abs(F_at_0 * F_at_root));
  CHECK(example_map().resultant() == r);
}

TEST_CASE("evaluation on the example map") {
  QuadMap f = example_map();
  CHECK(f.eval(pt("[0:1]")) == pt("[1:0]"));
  CHECK(f.eval(pt("[49:13]")) == pt("[-98:19]"));
  CHECK(f.eval(pt("[1:1]")) == pt("[91:19]"));
  CHECK(f.iterate(pt("[0:1]"), 6) == pt("[0:1]"));
  CHECK_THROWS_AS(QuadMap(ProjPoint<5>::parse("[1:0:0:1:0:0]")), Error);
}

TEST_CASE("conjugation") {
  QuadMap f = example_map();
  CHECK(conjugate(f, Mobius::identity()) == f);
  testgen::Gen g(21);
  for (int i = 0; i < 40; ++i) {
    Mobius h = g.mobius(6);
    QuadMap c = conjugate(f, h);
    for (const auto& p : example_cycle()) CHECK(c.eval(h.apply(p)) == h.apply(f.eval(p)));
    CHECK(conjugate(c, h.inverse()) == f);
  }
}

TEST_CASE("orbits") {
  auto rep = orbit(example_map(), pt("[0:1]"), 10);
  CHECK(rep.cycle_found);
  CHECK(rep.preperiod == 0);
  CHECK(rep.period == 6);

  auto sq = orbit(QuadMap(ProjPoint<5>::parse("[1:0:0:0:0:1]")), pt("[1:1]"), 5);
  CHECK(sq.cycle_found);
  CHECK(sq.period == 1);

  auto fam = genus0_family(2);
  auto fixed = orbit(fam.cycle.map, pt("[1:3]"), 5);
  CHECK(fixed.cycle_found);
  CHECK(fixed.period == 1);

  // [u^2:v^2] from [2:1]: heights square every step, never cycles.
  auto open = orbit(QuadMap(ProjPoint<5>::parse("[1:0:0:0:0:1]")), pt("[2:1]"), 6);
  CHECK_FALSE(open.cycle_found);
  CHECK(open.points.size() == 7);

  // Preperiodic: [u^2:v^2] sends [-1:1] to the fixed point [1:1].
  auto pre = orbit(QuadMap(ProjPoint<5>::parse("[1:0:0:0:0:1]")), pt("[-1:1]"), 4);
  CHECK(pre.preperiod == 1);
  CHECK(pre.period == 1);

  CHECK(minimal_period(example_map(), pt("[91:19]"), 20) == std::optional<std::size_t>(6));
}

TEST_CASE("cycle to endomorphism") {
  auto mc = cycle_to_endomorphism(example_cycle());
  CHECK(mc.map == example_map());

  // The degenerate family (1-t, (1-2t)/(1-t), t) at t = 3.
  Rational t = 3;
  std::vector<P1Point> bad{pt("[0:1]"), pt("[1:0]"), pt("[1:1]"), affine_point(1 - t),
                           affine_point((1 - 2 * t) / (1 - t)), affine_point(t)};
  try {
    cycle_to_endomorphism(bad);
    FAIL("degenerate family accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateMap);
  }

  std::vector<P1Point> fam{pt("[1:0]"), pt("[33:65]"), pt("[0:1]"), pt("[-2:45]"), pt("[1:1]"),
                           pt("[40:69]")};
  auto g0 = cycle_to_endomorphism(fam);
  CHECK(g0.map.eval(pt("[1:3]")) == pt("[1:3]"));

  std::vector<P1Point> repeated = example_cycle();
  repeated[4] = repeated[1];
  CHECK_THROWS_AS(cycle_to_endomorphism(repeated), Error);
  auto five = example_cycle();
  five.pop_back();
  CHECK_THROWS_AS(verify_cycle(example_map(), five), Error);
}

TEST_CASE("moved cycles give conjugate maps") {
  testgen::Gen g(22);
  for (int i = 0; i < 30; ++i) {
    Mobius h = g.mobius(5);
    std::vector<P1Point> moved;
    for (const auto& p : example_cycle()) moved.push_back(h.apply(p));
    auto mc = cycle_to_endomorphism(moved);
    CHECK(mc.map == conjugate(example_map(), h));
    verify_cycle(mc.map, moved);
  }
}

TEST_CASE("standardizer") {
  testgen::Gen g(23);
  for (int i = 0; i < 50; ++i) {
    P1Point a = affine_point(g.rational(20)), b = affine_point(g.rational(20)),
            c = P1Point::from_rationals({g.rational(9), g.nonzero_rational(9)});
    if (a == b || b == c || a == c) continue;
    Mobius s = Mobius::standardizer(a, b, c);
    CHECK(s.apply(a) == pt("[0:1]"));
    CHECK(s.apply(b) == pt("[1:0]"));
    CHECK(s.apply(c) == pt("[1:1]"));
    CHECK(s.compose(s.inverse()).apply(a) == a);
  }
}
