#include "hexacycle/moduli.hpp"

#include <algorithm>

namespace hexacycle {

namespace {

Rational proj_coord(const P2Point& p, std::size_t i) { return p.coord(i); }

void require_model_size(const ModelPoint& p) {
  const bool ok = (p.n == 3 && std::holds_alternative<P2Point>(p.proj) && p.coords.empty()) ||
                  (p.n == 4 && std::holds_alternative<P1Point>(p.proj) && p.coords.size() == 1) ||
                  (p.n >= 5 && p.coords.size() == p.n - 3);
  if (!ok) throw Error(ErrorCode::InvalidArgument, "malformed model point for n=" + std::to_string(p.n));
}

std::array<Rational, 6> m3_coefficients(const P2Point& q) {
  const Rational a1 = proj_coord(q, 0), a3 = proj_coord(q, 1), a4 = proj_coord(q, 2);
  return {a3, a1, -a1 - a3, a3, a4, Rational(0)};
}

std::array<Rational, 6> m4_coefficients(const P1Point& q, const Rational& x) {
  const Rational a1 = q.coord(0), a2 = q.coord(1);
  const Rational x2 = x * x, x3 = x2 * x;
  const Rational a0 = -a1 * x - a2 * x2;
  return {a0, a1, a2, a0, -a1 * x2 - a2 * x3 + Rational(2) * a1 * x + x * a2 + a2 * x2,
          Rational(0)};
}

}  // namespace

ModelPoint model_point(std::vector<Rational> coords) {
  if (coords.size() < 2) throw Error(ErrorCode::InvalidArgument, "affine model needs n >= 5");
  ModelPoint p;
  p.n = static_cast<unsigned>(coords.size() + 3);
  p.coords = std::move(coords);
  return p;
}

ModelPoint model_point3(const P2Point& a1a3a4) {
  ModelPoint p;
  p.n = 3;
  p.proj = a1a3a4;
  return p;
}

ModelPoint model_point4(const P1Point& a1a2, const Rational& x) {
  ModelPoint p;
  p.n = 4;
  p.coords = {x};
  p.proj = a1a2;
  return p;
}

std::pair<ModelPoint, Mobius> normalize_marked(const MarkedCycle& mc) {
  const std::size_t n = mc.points.size();
  if (n < 3 || n > 6) throw Error(ErrorCode::InvalidArgument, "normalize_marked supports 3 <= n <= 6");
  const Mobius g = Mobius::standardizer(mc.points[0], mc.points[1], mc.points[2]);
  const QuadMap h = conjugate(mc.map, g);
  const auto& b = h.coeffs();
  if (n == 3) return {model_point3(P2Point::from_integers({b[1], b[0], b[4]})), g};
  if (n == 4) {
    const P1Point p4 = g.apply(mc.points[3]);
    return {model_point4(P1Point::from_integers({b[1], b[2]}), Rational(p4[1], p4[0])), g};
  }
  std::vector<Rational> x;
  for (std::size_t i = 3; i < n; ++i) x.push_back(affine_value(g.apply(mc.points[i])));
  return {model_point(std::move(x)), g};
}

std::array<Rational, 6> lemma22_coefficients(std::span<const Rational> x) {
  if (x.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two coordinates");
  const Rational& x1 = x[0];
  const Rational& x2 = x[1];
  const Rational& xk = x.back();
  const Rational x1s = x1 * x1, xks = xk * xk;
  const Rational a0 = x1 * (x2 * xk + x1 - x2 - xk);
  const Rational a1 = x1 * (xks - xks * x2 - x2 * x1 + x2 + x2 * x1s - x1s);
  const Rational a2 = x1 * xk * (xk * x2 - x1 * xk + x2 * x1 - x2 - x2 * x1s + x1s);
  const Rational a4 = -x1 * xks + xks + xk * x1s - xk + x1 * xk + x2 * x1s - x1s * xk * x2 + x1 -
                      Rational(2) * x1s;
  return {a0, a1, a2, a0, a4, Rational(0)};
}

QuadMap lemma22_inverse(std::span<const Rational> x) {
  const auto a = lemma22_coefficients(x);
  if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); })) {
    throw Error(ErrorCode::DegenerateMap, "all coefficients vanish");
  }
  return QuadMap::from_rationals(a);
}

MarkedCycle model_marked_cycle(const ModelPoint& point) {
  require_model_size(point);
  std::vector<P1Point> pts{P1Point::from_integers({0, 1}), P1Point::from_integers({1, 0}),
                           P1Point::from_integers({1, 1})};
  std::array<Rational, 6> a;
  if (point.n == 3) {
    a = m3_coefficients(std::get<P2Point>(point.proj));
  } else if (point.n == 4) {
    a = m4_coefficients(std::get<P1Point>(point.proj), point.coords[0]);
    pts.push_back(P1Point::from_rationals({Rational(1), point.coords[0]}));
  } else {
    a = lemma22_coefficients(point.coords);
    for (const auto& x : point.coords) pts.push_back(affine_point(x));
  }
  QuadMap f = QuadMap::from_rationals(a);
  verify_cycle(f, pts);
  return MarkedCycle{std::move(f), std::move(pts)};
}

ModelPoint sigma_action(const ModelPoint& point) {
  require_model_size(point);
  auto boundary = [&](const char* why) {
    return Error(ErrorCode::Boundary, std::string("boundary of birational action: ") + why);
  };
  switch (point.n) {
    case 3: {
      const auto& q = std::get<P2Point>(point.proj);
      const BigInt &a1 = q[0], &a3 = q[1], &a4 = q[2];
      return model_point3(P2Point::from_integers({2 * a3 + a4, -a3 - a4, a4 - a1}));
    }
    case 4: {
      const auto& q = std::get<P1Point>(point.proj);
      const Rational a1 = q.coord(0), a2 = q.coord(1), x = point.coords[0];
      if (x == Rational(1)) throw boundary("x = 1");
      const Rational top = (a2 - a2 * x * x - a1 * x - x * a2) * x;
      const Rational bot = (x - Rational(1)) * (a1 + x * a2);
      if (top.is_zero() && bot.is_zero()) throw boundary("coefficient point vanishes");
      return model_point4(P1Point::from_rationals({top, bot}), x / (x - Rational(1)));
    }
    case 5: {
      const Rational &x = point.coords[0], &y = point.coords[1];
      if (y == Rational(1)) throw boundary("y = 1");
      return model_point({(x - Rational(1)) / (y - Rational(1)), Rational(1) - x});
    }
    case 6: {
      const Rational &x = point.coords[0], &y = point.coords[1], &z = point.coords[2];
      if (y == Rational(1)) throw boundary("y = 1");
      if (z == Rational(1)) throw boundary("z = 1");
      const Rational xm = x - Rational(1);
      return model_point({xm / (y - Rational(1)), xm / (z - Rational(1)), Rational(1) - x});
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "sigma_action supports n in {3,4,5,6}");
  }
}

Membership membership(unsigned n, std::span<const Rational> coords) {
  if (n < 5 || coords.size() != n - 3) {
    throw Error(ErrorCode::InvalidArgument, "membership needs n >= 5 and n-3 coordinates");
  }
  const std::size_t k = coords.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::string name = "x_" + std::to_string(i + 1);
    if (coords[i].is_zero()) return {false, "coordinate " + name + " equals 0"};
    if (coords[i] == Rational(1)) return {false, "coordinate " + name + " equals 1"};
    for (std::size_t j = 0; j < i; ++j) {
      if (coords[i] == coords[j]) {
        return {false, "coords not distinct: x_" + std::to_string(j + 1) + " = " + name};
      }
    }
  }
  const auto a = lemma22_coefficients(coords);
  if (resultant(std::span<const Rational, 6>(a)).is_zero()) {
    return {false, "resultant zero: induced map is not of degree 2"};
  }
  const QuadMap f = QuadMap::from_rationals(a);
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (f.eval(affine_point(coords[i])) != affine_point(coords[i + 1])) {
      return {false, "closed condition f([x_" + std::to_string(i + 1) + ":1]) = [x_" +
                         std::to_string(i + 2) + ":1] fails"};
    }
  }
  return {true, ""};
}

}  // namespace hexacycle
