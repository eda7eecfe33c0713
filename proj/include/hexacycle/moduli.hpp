#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hexacycle/endo.hpp"

namespace hexacycle {

// Point of the affine model of M_2(n), 3 <= n <= 6.
//
// n = 3: projective coefficient point [a1:a3:a4] of the map
//        [a3u^2 + a1uv - (a1+a3)v^2 : a3u^2 + a4uv] with cycle 0 -> inf -> 1.
// n = 4: ([a1:a2], x) with the fourth marked point [1:x].
// n >= 5: coords (x_1, ..., x_{n-3}) of the marked points [x_i:1].
struct ModelPoint {
  unsigned n = 0;
  std::vector<Rational> coords;
  std::variant<std::monostate, P2Point, P1Point> proj;

  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
};

ModelPoint model_point(std::vector<Rational> coords);  // n = coords.size() + 3 >= 5
ModelPoint model_point3(const P2Point& a1a3a4);
ModelPoint model_point4(const P1Point& a1a2, const Rational& x);

// Brings the cycle to the standard form (f', [0:1], [1:0], [1:1], ...).
// Returns the model point and the standardizing map g with f' = g f g^{-1}.
std::pair<ModelPoint, Mobius> normalize_marked(const MarkedCycle& mc);

// Closed-form coefficients (a0:...:a5) of the map sending
// 0 -> inf -> 1 -> x_1 -> x_2 and x_k -> 0, for k = x.size() >= 2.
// Only the resultant is checked here; throws Error(DegenerateMap) when it
// vanishes.
QuadMap lemma22_inverse(std::span<const Rational> x);
std::array<Rational, 6> lemma22_coefficients(std::span<const Rational> x);

// The standard-form map and cycle represented by a model point.
MarkedCycle model_marked_cycle(const ModelPoint& point);

// The cyclic shift (p1,...,pn) -> (p2,...,pn,p1) in model coordinates.
// Throws Error(Boundary) where the birational formula has a pole.
ModelPoint sigma_action(const ModelPoint& point);

struct Membership {
  bool inside = false;
  std::string reason;  // first failed condition when outside
};

// Membership in the image of M_2(n) in A^{n-3}, n >= 5.
Membership membership(unsigned n, std::span<const Rational> coords);

}  // namespace hexacycle
