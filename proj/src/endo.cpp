#include "hexacycle/endo.hpp"

#include <map>
#include <set>

#include "hexacycle/moduli.hpp"

namespace hexacycle {

namespace {

template <typename T>
T resultant_impl(std::span<const T, 6> a) {
  const T &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4], &a5 = a[5];
  return a2 * a2 * a3 * a3 + a0 * a0 * a5 * a5 - T(2) * a3 * a2 * a0 * a5 -
         a1 * a2 * a3 * a4 - a4 * a1 * a0 * a5 + a0 * a4 * a4 * a2 + a1 * a1 * a3 * a5;
}

// c0 U^2 + c1 UV + c2 V^2 with U = p u + q v, V = r u + s v.
std::array<Rational, 3> substitute_linear(const Rational& c0, const Rational& c1,
                                          const Rational& c2, const Rational& p,
                                          const Rational& q, const Rational& r,
                                          const Rational& s) {
  return {c0 * p * p + c1 * p * r + c2 * r * r,
          Rational(2) * c0 * p * q + c1 * (p * s + q * r) + Rational(2) * c2 * r * s,
          c0 * q * q + c1 * q * s + c2 * s * s};
}

}  // namespace

Rational resultant(std::span<const Rational, 6> a) { return resultant_impl<Rational>(a); }
BigInt resultant(std::span<const BigInt, 6> a) {
  const auto r = resultant_impl<BigInt>(a);
  return r;
}

Mobius::Mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  const std::array<BigInt, 4> raw{a, b, c, d};
  const auto v = detail::normalize_projective(std::span<const BigInt>(raw));
  std::copy(v.begin(), v.end(), m_.begin());
  if (determinant() == 0) throw Error(ErrorCode::DegenerateMap, "Mobius map with zero determinant");
}

Mobius Mobius::from_rationals(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
  const std::array<Rational, 4> raw{a, b, c, d};
  const auto v = detail::normalize_projective(std::span<const Rational>(raw));
  return Mobius(v[0], v[1], v[2], v[3]);
}

Mobius Mobius::standardizer(const P1Point& p, const P1Point& q, const P1Point& r) {
  if (p == q || q == r || p == r) {
    throw Error(ErrorCode::InvalidArgument, "standardizer needs three distinct points");
  }
  // L_x(z) = z_u x_v - z_v x_u vanishes at z = x.
  auto lin = [](const P1Point& x, const P1Point& z) -> BigInt { return z[0] * x[1] - z[1] * x[0]; };
  const BigInt k1 = lin(q, r);
  const BigInt k2 = lin(p, r);
  return Mobius(p[1] * k1, -p[0] * k1, q[1] * k2, -q[0] * k2);
}

P1Point Mobius::apply(const P1Point& p) const {
  const std::array<BigInt, 2> img{m_[0] * p[0] + m_[1] * p[1], m_[2] * p[0] + m_[3] * p[1]};
  return P1Point::from_integers(img);
}

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Mobius Mobius::compose(const Mobius& rhs) const {
  return Mobius(m_[0] * rhs.m_[0] + m_[1] * rhs.m_[2], m_[0] * rhs.m_[1] + m_[1] * rhs.m_[3],
                m_[2] * rhs.m_[0] + m_[3] * rhs.m_[2], m_[2] * rhs.m_[1] + m_[3] * rhs.m_[3]);
}

std::string Mobius::str() const {
  return "[[" + m_[0].get_str() + "," + m_[1].get_str() + "],[" + m_[2].get_str() + "," +
         m_[3].get_str() + "]]";
}

QuadMap::QuadMap(const ProjPoint<5>& coeffs) : coeffs_(coeffs) {
  if (resultant() == 0) {
    throw Error(ErrorCode::DegenerateMap,
                "coefficients " + coeffs.str() + " have zero resultant (not of degree 2)");
  }
}

QuadMap QuadMap::from_rationals(std::span<const Rational, 6> coeffs) {
  return QuadMap(ProjPoint<5>::from_rationals(std::span<const Rational>(coeffs)));
}

QuadMap QuadMap::from_rationals(std::initializer_list<Rational> coeffs) {
  return QuadMap(ProjPoint<5>::from_rationals(coeffs));
}

std::array<Rational, 6> QuadMap::rational_coeffs() const {
  std::array<Rational, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = Rational(coeffs_[i]);
  return out;
}

BigInt QuadMap::resultant() const {
  return hexacycle::resultant(std::span<const BigInt, 6>(coeffs_.coords()));
}

P1Point QuadMap::eval(const P1Point& p) const {
  const auto& a = coeffs_.coords();
  const BigInt uu = p[0] * p[0], uv = p[0] * p[1], vv = p[1] * p[1];
  const std::array<BigInt, 2> img{a[0] * uu + a[1] * uv + a[2] * vv,
                                  a[3] * uu + a[4] * uv + a[5] * vv};
  return P1Point::from_integers(img);
}

P1Point QuadMap::iterate(const P1Point& p, std::size_t steps) const {
  P1Point x = p;
  for (std::size_t i = 0; i < steps; ++i) x = eval(x);
  return x;
}

QuadMap conjugate(const QuadMap& f, const Mobius& g) {
  const Mobius h = g.inverse();
  const auto a = f.rational_coeffs();
  const Rational p(h.a()), q(h.b()), r(h.c()), s(h.d());
  const auto top = substitute_linear(a[0], a[1], a[2], p, q, r, s);
  const auto bot = substitute_linear(a[3], a[4], a[5], p, q, r, s);
  const Rational ga(g.a()), gb(g.b()), gc(g.c()), gd(g.d());
  std::array<Rational, 6> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = ga * top[i] + gb * bot[i];
    out[3 + i] = gc * top[i] + gd * bot[i];
  }
  return QuadMap::from_rationals(out);
}

OrbitReport orbit(const QuadMap& f, const P1Point& start, std::size_t max_steps) {
  if (max_steps == 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  OrbitReport rep;
  rep.points.push_back(start);
  std::map<P1Point, std::size_t> seen{{start, 0}};
  for (std::size_t step = 1; step <= max_steps; ++step) {
    P1Point next = f.eval(rep.points.back());
    const auto it = seen.find(next);
    if (it != seen.end()) {
      rep.cycle_found = true;
      rep.preperiod = it->second;
      rep.period = step - it->second;
      return rep;
    }
    seen.emplace(next, step);
    rep.points.push_back(std::move(next));
  }
  return rep;
}

std::optional<std::size_t> minimal_period(const QuadMap& f, const P1Point& p, std::size_t bound) {
  P1Point x = p;
  for (std::size_t d = 1; d <= bound; ++d) {
    x = f.eval(x);
    if (x == p) return d;
  }
  return std::nullopt;
}

void verify_cycle(const QuadMap& f, std::span<const P1Point> points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty cycle");
  std::set<P1Point> distinct(points.begin(), points.end());
  if (distinct.size() != n) throw Error(ErrorCode::InvalidArgument, "cycle points are not distinct");
  for (std::size_t i = 0; i < n; ++i) {
    const P1Point img = f.eval(points[i]);
    if (img != points[(i + 1) % n]) {
      throw Error(ErrorCode::InvalidArgument, "map sends " + points[i].str() + " to " + img.str() +
                                                  ", not " + points[(i + 1) % n].str());
    }
  }
  // Proper divisors of n; for n = 6 these are 1, 2, 3.
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (f.iterate(points[0], d) == points[0]) {
      throw Error(ErrorCode::NotMinimalPeriod,
                  "period divides " + std::to_string(n) + " properly (f^" + std::to_string(d) +
                      " fixes " + points[0].str() + ")");
    }
  }
}

MarkedCycle cycle_to_endomorphism(std::span<const P1Point> points) {
  const std::size_t n = points.size();
  if (n < 5) throw Error(ErrorCode::InvalidArgument, "cycle_to_endomorphism needs at least 5 points");
  std::set<P1Point> distinct(points.begin(), points.end());
  if (distinct.size() != n) throw Error(ErrorCode::InvalidArgument, "cycle points are not distinct");

  const Mobius g = Mobius::standardizer(points[0], points[1], points[2]);
  std::vector<Rational> x;
  for (std::size_t i = 3; i < n; ++i) x.push_back(affine_value(g.apply(points[i])));

  const QuadMap normalized = lemma22_inverse(x);
  QuadMap f = conjugate(normalized, g.inverse());
  try {
    verify_cycle(f, points);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotMinimalPeriod) throw;
    throw Error(ErrorCode::DegenerateMap,
                std::string("no quadratic map realizes this cycle: ") + e.what());
  }
  return MarkedCycle{std::move(f), std::vector<P1Point>(points.begin(), points.end())};
}

}  // namespace hexacycle
