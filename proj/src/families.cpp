#include "hexacycle/families.hpp"

#include <optional>
#include <set>

#include "hexacycle/error.hpp"
#include "intmath.hpp"
#include "surface_forms.hpp"

namespace hexacycle {

bool on_curve(const Rational& x, const Rational& y) {
  return y * y == x * x * x + 4 * x * x + 3 * x + 1;
}

ECPoint ECPoint::affine(Rational x, Rational y) {
  if (!on_curve(x, y))
    throw Error(ErrorCode::InvalidArgument, "(" + x.str() + ", " + y.str() + ") is not on E");
  return {false, std::move(x), std::move(y)};
}

std::string ECPoint::str() const {
  return infinity ? std::string("O") : "(" + x.str() + ", " + y.str() + ")";
}

ECPoint ec_negate(const ECPoint& p) {
  if (p.infinity) return p;
  return {false, p.x, -p.y};
}

ECPoint ec_add(const ECPoint& p, const ECPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rational slope;
  if (p.x == q.x) {
    if (p.y + q.y == 0) return ECPoint::at_infinity();
    slope = (3 * p.x * p.x + 8 * p.x + 3) / (2 * p.y);
  } else {
    slope = (q.y - p.y) / (q.x - p.x);
  }
  Rational x3 = slope * slope - 4 - p.x - q.x;
  Rational y3 = -(p.y + slope * (x3 - p.x));
  return {false, x3, y3};
}

ECPoint ec_multiple(const ECPoint& p, long n) {
  ECPoint base = n < 0 ? ec_negate(p) : p;
  ECPoint acc = ECPoint::at_infinity();
  for (long i = 0; i < (n < 0 ? -n : n); ++i) acc = ec_add(acc, base);
  return acc;
}

ECPoint ec_generator() { return ECPoint::affine(0, 1); }
ECPoint ec_torsion() { return ECPoint::affine(-1, 1); }

const char* slice_name(Slice s) {
  switch (s) {
    case Slice::Z0: return "Z0";
    case Slice::X0: return "X0";
    case Slice::Y0: return "Y0";
  }
  return "?";
}

Slice parse_slice(const std::string& name) {
  if (name == "Z0" || name == "Z=0" || name == "z") return Slice::Z0;
  if (name == "X0" || name == "X=0" || name == "x") return Slice::X0;
  if (name == "Y0" || name == "Y=0" || name == "y") return Slice::Y0;
  throw Error(ErrorCode::InvalidArgument, "unknown slice '" + name + "' (expected Z0, X0 or Y0)");
}

namespace {

// [W:X:Y:Z] -> [W:Y:Z:X], which permutes the factors of XYZ.
P3Point rotate_xyz(const P3Point& p) { return P3Point::from_integers({p[0], p[2], p[3], p[1]}); }

}  // namespace

EllipticFamilyMember elliptic_family_map(long n, Slice slice, int torsion) {
  if (n == 0) throw Error(ErrorCode::ExcludedParameter, "n = 0 gives the point at infinity");
  std::string label = "n=" + std::to_string(n) + ", torsion=" + std::to_string(torsion);
  ECPoint pt = ec_add(ec_multiple(ec_generator(), n), ec_multiple(ec_torsion(), torsion));
  if (pt.infinity) throw Error(ErrorCode::ExcludedParameter, label + ": point at infinity");
  if (pt.x.is_zero() || pt.y.is_zero())
    throw Error(ErrorCode::ExcludedParameter, label + ": " + pt.str() + " has a zero coordinate");

  P3Point sp = P3Point::from_rationals({Rational(1) / pt.y, Rational(1) / pt.x, 1, 0});
  if (slice == Slice::Y0) sp = rotate_xyz(sp);
  if (slice == Slice::X0) sp = rotate_xyz(rotate_xyz(sp));

  auto m = s6_membership(sp);
  if (!m.inside)
    throw Error(ErrorCode::ExcludedParameter,
                label + ": surface point " + sp.str() + " is on the boundary (" + m.reason + ")");
  auto xyz = phi_inverse(sp);
  return {n, torsion, slice, pt, sp, model_point({xyz[0], xyz[1], xyz[2]}),
          point_to_endomorphism(sp)};
}

std::array<P1Point, 6> genus0_cycle_points(const Rational& p) {
  Rational p2 = p * p, p3 = p2 * p;
  std::array<std::array<Rational, 2>, 6> raw{{
      {1, 0},
      {p3 + 5 * p2 + 2 * p + 1, (2 * p + 1) * (p3 + p2 + 1)},
      {0, 1},
      {(p + 2) * (p3 - p2 - 2 * p - 1), 2 * (p - 1) * (p + 1) * (p + 1) * (2 * p + 1)},
      {1, 1},
      {2 * (p + 2) * (2 * p + 1), (p + 1) * (p3 + p2 + 4 * p + 3)},
  }};
  std::vector<P1Point> out;
  for (std::size_t i = 0; i < 6; ++i) {
    if (raw[i][0].is_zero() && raw[i][1].is_zero())
      throw Error(ErrorCode::ExcludedParameter,
                  "p=" + p.str() + ": both coordinates of x" + std::to_string(i + 1) + " vanish");
    out.push_back(P1Point::from_rationals({raw[i][0], raw[i][1]}));
  }
  return {out[0], out[1], out[2], out[3], out[4], out[5]};
}

namespace {

std::array<Rational, 4> genus0_lambdas(const Rational& p) {
  Rational p2 = p * p, p3 = p2 * p;
  Rational a = p3 + 5 * p2 + 2 * p + 1;
  Rational b = p3 + p2 + 1;
  Rational c = p3 - p2 - 2 * p - 1;
  Rational d = p3 + p2 + 4 * p + 3;
  return {a / ((1 + 2 * p) * b), (p + 2) * (p + 2) * c * c / (a * d * (p + 1) * (p + 1)),
          2 * (p + 2) * (1 + 2 * p) / ((p + 1) * d),
          (p2 - 1) * a * c / ((2 * p + 1) * (2 * p + 1) * b * b)};
}

}  // namespace

Genus0Member genus0_family(const Rational& p) {
  std::string label = "p=" + p.str();
  auto pts = genus0_cycle_points(p);
  P1Point x0 = P1Point::from_rationals({1, p + 1});
  std::vector<P1Point> seven{x0};
  seven.insert(seven.end(), pts.begin(), pts.end());
  for (std::size_t i = 0; i < seven.size(); ++i)
    for (std::size_t j = i + 1; j < seven.size(); ++j)
      if (seven[i] == seven[j])
        throw Error(ErrorCode::ExcludedParameter, label + ": x" + std::to_string(i) +
                                                      " coincides with x" + std::to_string(j) +
                                                      " = " + seven[i].str());

  std::optional<MarkedCycle> mc;
  try {
    mc = cycle_to_endomorphism(pts);
  } catch (const Error& e) {
    throw Error(ErrorCode::ExcludedParameter, label + ": " + e.what());
  }

  Genus0Member out{p, *mc, x0, mc->map.eval(x0) == x0, genus0_lambdas(p)};
  const auto& l = out.lambdas;
  auto at = [](const Rational& v) { return affine_point(v); };
  out.lambda_ok = pts[1] == at(l[0]) && pts[5] == at(l[2]) &&
                  mc->map.eval(at(l[1])) == P1Point::from_integers({0, 1}) &&
                  mc->map.eval(at(l[3])) == P1Point::from_integers({1, 0});
  return out;
}

PrefactorReport prefactor_report() {
  PrefactorReport r;
  r.samples = {2, 3, Rational(1, 2), -3, Rational(5, 3)};
  struct Cand {
    const char* label;
    const char* num;
    const char* den;
    Rational (*ratio)(const Rational&);
  };
  static const Cand cands[] = {
      {"as typeset", "(2p+1)(p^3+p^2+1)", "p^5+5p^2+2p+1",
       [](const Rational& p) {
         return (2 * p + 1) * (p * p * p + p * p + 1) / (pow(p, 5) + 5 * p * p + 2 * p + 1);
       }},
      {"cubic denominator", "(2p+1)(p^3+p^2+1)", "p^3+5p^2+2p+1",
       [](const Rational& p) {
         return (2 * p + 1) * (p * p * p + p * p + 1) / (p * p * p + 5 * p * p + 2 * p + 1);
       }},
      {"swapped", "p^3+5p^2+2p+1", "(2p+1)(p^3+p^2+1)",
       [](const Rational& p) {
         return (p * p * p + 5 * p * p + 2 * p + 1) / ((2 * p + 1) * (p * p * p + p * p + 1));
       }},
  };
  for (const auto& c : cands) {
    PrefactorCandidate pc{c.label, c.num, c.den, true};
    for (const auto& p : r.samples) {
      auto coeffs = genus0_family(p).cycle.map.rational_coeffs();
      if (coeffs[0] / coeffs[3] != c.ratio(p)) pc.consistent = false;
    }
    r.candidates.push_back(pc);
  }
  return r;
}

std::vector<P2Point> fermat_curve_points(long height) {
  using detail::i128;
  if (height < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
  if (height > 1000000) throw Error(ErrorCode::InvalidArgument, "height above 10^6 is not supported");
  std::set<P2Point> found;
  auto add = [&](long x, long y, long z) {
    if (detail::gcd64(detail::gcd64(x, y), z) != 1) return;
    found.insert(P2Point::from_integers({x, y, z}));
  };
  for (long y = 1; y <= height; ++y) add(0, y, 0);  // z = 0 forces x = 0
  for (long z = -height; z <= height; ++z) {
    if (z == 0) continue;
    for (long x = -height; x <= height; ++x) {
      i128 rhs = 4 * static_cast<i128>(x) * x * x + static_cast<i128>(z) * z * z;
      if (rhs % z != 0) continue;
      i128 y2 = rhs / z, y;
      if (!detail::is_square(y2, y) || y > height) continue;
      add(x, static_cast<long>(y), z);
      add(x, -static_cast<long>(y), z);
    }
  }
  return {found.begin(), found.end()};
}

P2Point cubic_curve_param(const Rational& m) {
  auto c = forms::cubic_param(m);
  return P2Point::from_rationals({c[0], c[1], c[2]});
}

}  // namespace hexacycle
