#pragma once

#include <array>
#include <string>
#include <vector>

#include "hexacycle/moduli.hpp"
#include "hexacycle/surface.hpp"

namespace hexacycle {

// Point of E: y^2 = x^3 + 4x^2 + 3x + 1, or the point at infinity.
struct ECPoint {
  bool infinity = true;
  Rational x;
  Rational y;

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(Rational x, Rational y);  // throws InvalidArgument off the curve
  std::string str() const;

  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

bool on_curve(const Rational& x, const Rational& y);
ECPoint ec_negate(const ECPoint& p);
ECPoint ec_add(const ECPoint& p, const ECPoint& q);
// n * p by repeated addition; negative n allowed.
ECPoint ec_multiple(const ECPoint& p, long n);

ECPoint ec_generator();  // (0, 1)
ECPoint ec_torsion();    // (-1, 1), of order 3

enum class Slice { Z0, X0, Y0 };
const char* slice_name(Slice s);
Slice parse_slice(const std::string& name);  // "Z0", "X0", "Y0" (also "Z=0" etc.)

struct EllipticFamilyMember {
  long n = 0;
  int torsion = 0;
  Slice slice = Slice::Z0;
  ECPoint curve_point;
  P3Point surface_point;
  ModelPoint model;
  MarkedCycle cycle;
};

// n*(0,1) + torsion*(-1,1) pushed to the chosen slice of S6 and turned into
// a marked map. Throws Error(ExcludedParameter) with the reason when the
// point is at infinity, has x = 0 or y = 0, or lies on the boundary.
EllipticFamilyMember elliptic_family_map(long n, Slice slice = Slice::Z0, int torsion = 0);

struct Genus0Member {
  Rational p;
  MarkedCycle cycle;  // x1..x6
  P1Point fixed_point;
  bool fixed_point_ok = false;
  std::array<Rational, 4> lambdas;
  bool lambda_ok = false;  // lambda1 = x2, lambda3 = x6, f(lambda2) = 0, f(lambda4) = inf
};

// The six displayed cycle points at p; throws Error(ExcludedParameter) when a
// point has both coordinates zero.
std::array<P1Point, 6> genus0_cycle_points(const Rational& p);
// Throws Error(ExcludedParameter) naming the coincidence or degeneracy.
Genus0Member genus0_family(const Rational& p);

struct PrefactorCandidate {
  std::string label;
  std::string numerator;
  std::string denominator;
  bool consistent = false;  // matches a0/a3 of the true map at every sample p
};

struct PrefactorReport {
  std::vector<Rational> samples;
  std::vector<PrefactorCandidate> candidates;
};

// Compares the typeset prefactors of the genus-0 map with the map built from
// its cycle.
PrefactorReport prefactor_report();

// Points of y^2 z = 4x^3 + z^3 with coprime coordinates of absolute value at
// most height, canonical and sorted. Heights above 10^6 are rejected.
std::vector<P2Point> fermat_curve_points(long height);

// c(m) on X^3+Y^3+Z^3 = X^2Y+Y^2Z+Z^2X.
P2Point cubic_curve_param(const Rational& m);

}  // namespace hexacycle
