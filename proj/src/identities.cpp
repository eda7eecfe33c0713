#include <cstdint>
#include <random>
#include <set>

#include "hexacycle/error.hpp"
#include "hexacycle/surface.hpp"
#include "surface_forms.hpp"

namespace hexacycle {

namespace {

IdentityRecord record(std::string name, std::string description) {
  IdentityRecord r;
  r.name = std::move(name);
  r.description = std::move(description);
  return r;
}

std::string first_term(const MultiPoly& p) {
  MultiPoly t(p.vars());
  auto it = p.terms().begin();
  t.add_term(it->first, it->second);
  return t.str();
}

IdentityRecord poly_record(std::string name, std::string description, const MultiPoly& lhs,
                           const MultiPoly& rhs) {
  IdentityRecord r = record(std::move(name), std::move(description));
  MultiPoly diff = lhs - rhs;
  r.verified = diff.is_zero();
  if (!r.verified) r.witness = "lhs - rhs has term " + first_term(diff);
  return r;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value) {
  std::map<std::string, MultiPoly> subst;
  for (const auto& v : p.vars()) subst.emplace(v, MultiPoly::variable(p.vars(), v));
  subst.insert_or_assign(var, value);
  return p.compose(subst);
}

bool proportional(const std::array<MultiPoly, 4>& u, const std::array<MultiPoly, 4>& v) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
  return true;
}

IdentityRecord sigma6_record() {
  auto v = MultiPoly::variables({"x", "y", "z"});
  const MultiPoly &x = v[0], &y = v[1], &z = v[2];
  MultiPoly one = MultiPoly::constant(x.vars(), 1);
  // tau(x,y,z) = ((x-1)/(y-1), (x-1)/(z-1), 1-x), cleared to one denominator.
  auto lhs = forms::phi_h<MultiPoly>((x - 1) * (z - 1), (x - 1) * (y - 1), (1 - x) * (y - 1) * (z - 1),
                              (y - 1) * (z - 1));
  auto base = forms::phi_h<MultiPoly>(x, y, z, one);
  std::array<MultiPoly, 4> lemma{-base[0], base[2], base[3], base[1]};
  std::array<MultiPoly, 4> prop{-base[0], base[3], base[1], base[2]};
  bool lemma_ok = proportional(lhs, lemma);
  bool prop_ok = proportional(lhs, prop);

  IdentityRecord r = record("sigma6", "phi o tau = A o phi selects the generator A of sigma_6 on P^3");
  r.verified = lemma_ok;
  r.note = std::string("[-W:Y:Z:X] ") + (lemma_ok ? "matches" : "does not match") +
           "; [-W:Z:X:Y] " + (prop_ok ? "matches" : "does not match (it is the inverse generator)");
  if (!lemma_ok) r.witness = "phi o tau is not proportional to [-W:Y:Z:X] o phi";
  return r;
}

P3Point point4(long w, long x, long y, long z) { return P3Point::from_integers({w, x, y, z}); }

const std::vector<P3Point>& inside_reference_points() {
  static const std::vector<P3Point> pts{point4(56, -52, 91, 0),
                                        point4(16685, -46572, 20403, 35913),
                                        point4(62257, -75523, 54607, 72443)};
  return pts;
}

// The sigma_6^2 quotient pipeline. Returns false when the sample is unusable
// (W = 0 or the image point vanishes); otherwise sets ok.
bool quotient_check(const P3Point& p, bool& ok) {
  if (p[0] == 0) return false;
  Rational W = p.coord(0), X = p.coord(1), Y = p.coord(2), Z = p.coord(3);
  Rational x0 = (X + Y + Z) / W, x1 = (X - Y) / W, x2 = (Y - Z) / W;
  Rational v1 = x2 * x2 + x1 * x2 + x1 * x1;
  Rational v2 = x1 * x2 * x2 + x1 * x1 * x2;
  Rational v3 = x1 * x1 * x1 - x2 * x2 * x2 - 3 * x1 * x2 * x2;
  Rational affine = x0 * x0 * x0 * (32 - 2 * v1) + 3 * v3 * x0 * x0 - 6 * v1 * x0 - 12 * v2 + v3 -
                    v1 * (v3 - 3 * v2);
  Rational tw = v1, tx = v1 * x0, ty = v2, tz = v3;
  if (tw.is_zero() && tx.is_zero() && ty.is_zero() && tz.is_zero()) return false;
  Rational q = 9 * ty * ty + 3 * ty * tz + tz * tz;
  Rational f3 = (tz + 2 * tx) * (16 * tx * tx - 8 * tx * tz + tz * tz - 27 * ty * ty - 9 * ty * tz) -
                108 * ty * ty * ty;
  Rational f5 = tx * tx * q * (2 * tx - 3 * tz) - (3 * ty - tz) * q * q;
  ok = affine.is_zero() && (tw * tw * f3 - f5).is_zero();
  return true;
}

IdentityRecord quotient_record(std::uint64_t seed) {
  IdentityRecord r = record("i", "sigma_6^2 quotient: invariants (v1,v2,v3) carry S6 into W^2 F3~ = F5~ "
                        "(exact sampling)");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };

  std::vector<P3Point> samples = inside_reference_points();
  std::set<Rational> used_p;
  while (used_p.size() < 16) {
    Rational p(BigInt(pick(41) - 20), BigInt(pick(20) + 1));
    if (p == 1 || p == -1 || !used_p.insert(p).second) continue;
    P3Point q = cubic_curve_surface_point(p);
    for (long k = pick(6); k > 0; --k) q = sigma6_surface(q);
    samples.push_back(q);
  }
  const auto& comps = boundary_components();
  for (int i = 0; i < 8; ++i) {
    const auto& c = comps[static_cast<std::size_t>(pick(comps.size()))];
    auto pts = sample_component(c, 12);
    samples.push_back(pts[static_cast<std::size_t>(pick(pts.size()))]);
  }

  std::size_t used = 0;
  for (const auto& p : samples) {
    bool ok = false;
    if (!quotient_check(p, ok)) continue;
    ++used;
    if (!ok) {
      r.witness = "pipeline fails at " + p.str();
      return r;
    }
  }
  r.note = std::to_string(used) + " sample points";
  if (used < 20) {
    r.witness = "only " + r.note + " usable";
    return r;
  }
  r.verified = true;
  return r;
}

}  // namespace

MultiPoly boundary_product() {
  auto v = MultiPoly::variables(surface_vars());
  const MultiPoly &W = v[0], &X = v[1], &Y = v[2], &Z = v[3];
  return (W * W + X * Y + Y * Z + X * Z) * (W * W - X * X) * (W * W - Y * Y) * (W * W - Z * Z) *
         (X * X - Y * Y) * (Y * Y - Z * Z) * (Z * Z - X * X);
}

IdentityRecord boundary_product_record(const MultiPoly& product) {
  IdentityRecord r = record("a", "the degree-14 product vanishes on all 23 boundary curves and not on "
                        "points of M_2(6)");
  auto vals = [&](const P3Point& p) {
    return product.eval(std::array<Rational, 4>{p.coord(0), p.coord(1), p.coord(2), p.coord(3)});
  };
  for (const auto& c : boundary_components()) {
    for (const auto& p : sample_component(c, 10)) {
      if (!vals(p).is_zero()) {
        r.witness = "nonzero on " + c.name + " at " + p.str();
        return r;
      }
    }
  }
  for (const auto& p : inside_reference_points()) {
    if (vals(p).is_zero()) {
      r.witness = "vanishes at the interior point " + p.str();
      return r;
    }
  }
  r.verified = true;
  return r;
}

std::vector<IdentityRecord> verify_identities(std::uint64_t seed) {
  std::vector<IdentityRecord> out;
  auto v = MultiPoly::variables(surface_vars());
  const MultiPoly &W = v[0], &X = v[1], &Y = v[2], &Z = v[3];
  const MultiPoly& G = surface_equation();

  {
    IdentityRecord a = boundary_product_record(boundary_product());
    MultiPoly printed = (W * W + X * Y + Y * Z + X * Z) * (W * W - X * X) * (W * W - Y * Y) *
                        (W * W - Z * Z) * (X * X - Y * Y) * (Y * Y - Z * Z) * (Y * Y - Z * Z);
    IdentityRecord p = boundary_product_record(printed);
    a.note = "uses (Z^2-X^2) for the repeated factor (Y^2-Z^2); the product as typeset " +
             (p.verified ? std::string("also vanishes on the boundary")
                         : "is " + p.witness);
    out.push_back(std::move(a));
  }

  out.push_back(poly_record("b", "Gamma at W=X is (X+Z)(Y+X)^2(X^2+XY+3XZ-YZ)",
                            substitute(G, "W", X),
                            (X + Z) * (Y + X) * (Y + X) * (X * X + X * Y + 3 * X * Z - Y * Z)));
  out.push_back(poly_record("c.1", "Gamma at W=-Y is (X+Y)(Y+Z)^2(3XY+Y^2-XZ+YZ)",
                            substitute(G, "W", -Y),
                            (X + Y) * (Y + Z) * (Y + Z) * (3 * X * Y + Y * Y - X * Z + Y * Z)));
  out.push_back(poly_record("c.2", "Gamma at X=-Y is (Y-W)(W+Y)(Y-Z)(Y+Z)^2",
                            substitute(G, "X", -Y),
                            (Y - W) * (W + Y) * (Y - Z) * (Y + Z) * (Y + Z)));
  out.push_back(poly_record("c.3", "Gamma at Z=X is (X+Y)(W(Y+3X)+X(X-Y))(W(Y+3X)-X(X-Y))",
                            substitute(G, "Z", X),
                            (X + Y) * (W * (Y + 3 * X) + X * (X - Y)) *
                                (W * (Y + 3 * X) - X * (X - Y))));

  MultiPoly s = W * (X + Y + 2 * Z);
  MultiPoly d = W * W + X * Y + Y * Z + X * Z;
  out.push_back(poly_record(
      "d.1", "(s+XY-Z^2)(-s+XY-Z^2)(X+Y)+Gamma = (Y-Z)(Y+Z)(X-Z)(W^2+XY+YZ+XZ), s=W(X+Y+2Z)",
      (s + X * Y - Z * Z) * (-s + X * Y - Z * Z) * (X + Y) + G, (Y - Z) * (Y + Z) * (X - Z) * d));
  out.push_back(poly_record(
      "d.2", "(s+Z(Y-X))(-s+Z(Y-X))(X+Y)+Gamma = (Y-Z)(Y+Z)(X-Z)(W-X)(W+X)",
      (s + Z * (Y - X)) * (-s + Z * (Y - X)) * (X + Y) + G,
      (Y - Z) * (Y + Z) * (X - Z) * (W - X) * (W + X)));

  {
    MultiPoly h = X + Y + Z;
    out.push_back(poly_record("e", "Gamma at W=X+Y+Z is (X^2+Y^2+Z^2+3(XY+XZ+YZ))((X+Y+Z)^3-X^2Y-Y^2Z-XZ^2)",
                              substitute(G, "W", h),
                              (X * X + Y * Y + Z * Z + 3 * (X * Y + X * Z + Y * Z)) *
                                  (h * h * h - X * X * Y - Y * Y * Z - X * Z * Z)));
  }

  {
    std::vector<std::string> mv{"m"};
    MultiPoly m = MultiPoly::variable(mv, "m");
    auto c = forms::cubic_param(m);
    out.push_back(poly_record("f.cubic", "c(m) lies on X^3+Y^3+Z^3 = X^2Y+Y^2Z+Z^2X",
                              c[0] * c[0] * c[0] + c[1] * c[1] * c[1] + c[2] * c[2] * c[2],
                              c[0] * c[0] * c[1] + c[1] * c[1] * c[2] + c[2] * c[2] * c[0]));
    std::map<std::string, MultiPoly> at_c{{"X", c[0]}, {"Y", c[1]}, {"Z", c[2]}};
    MultiPoly mm = pow(m * m - m, 3);
    MultiPoly f3c = cubic_F3().compose(at_c);
    MultiPoly f5c = quintic_F5().compose(at_c);
    auto r3 = poly_record("f.F3", "F3(c(m)) = -32(m^2-m)^3", f3c, Rational(-32) * mm);
    r3.note = "typeset constant is -4; full expansion gives -32";
    auto r5 = poly_record("f.F5", "F5(c(m)) = -32(m^2-m)^3(m^2-m+1)^3", f5c,
                          Rational(-32) * mm * pow(m * m - m + 1, 3));
    r5.note = "typeset constant is -4; full expansion gives -32";
    out.push_back(std::move(r3));
    out.push_back(std::move(r5));
  }

  {
    std::vector<std::string> pv{"p"};
    MultiPoly p = MultiPoly::variable(pv, "p");
    MultiPoly den = 1 - p * p;
    MultiPoly jn = p * p + p + 1, mn = 2 * p + 1;
    out.push_back(poly_record("g", "(j,m) = ((p^2+p+1)/(1-p^2), (2p+1)/(1-p^2)) satisfies "
                                   "j^2 = m^2-m+1 (cleared of denominators)",
                              jn * jn, mn * mn - mn * den + den * den));
  }

  {
    auto xv = MultiPoly::variables({"x1", "x2"});
    const MultiPoly &x1 = xv[0], &x2 = xv[1];
    auto inv = [](const MultiPoly& a, const MultiPoly& b) {
      return std::array<MultiPoly, 3>{b * b + a * b + a * a, a * b * b + a * a * b,
                                      a * a * a - b * b * b - 3 * a * b * b};
    };
    auto vv = inv(x1, x2);
    out.push_back(poly_record("h.relation", "v1^3 = 9v2^2 + 3v2v3 + v3^2", pow(vv[0], 3),
                              9 * vv[1] * vv[1] + 3 * vv[1] * vv[2] + vv[2] * vv[2]));
    auto moved = inv(x2, -x1 - x2);
    IdentityRecord r = record("h.invariance", "v1, v2, v3 are invariant under (x1,x2) -> (x2,-x1-x2)");
    r.verified = true;
    for (int i = 0; i < 3 && r.verified; ++i) {
      if (moved[i] != vv[i]) {
        r.verified = false;
        r.witness = "v" + std::to_string(i + 1) + " changes by " + first_term(moved[i] - vv[i]);
      }
    }
    out.push_back(std::move(r));
  }

  out.push_back(quotient_record(seed));

  out.push_back(poly_record("j", "Gamma at Z=0 is W^2(X^3+3X^2Y+4XY^2+Y^3)-Y^2X^3",
                            substitute(G, "Z", MultiPoly(G.vars())),
                            W * W * (X * X * X + 3 * X * X * Y + 4 * X * Y * Y + Y * Y * Y) -
                                Y * Y * X * X * X));

  out.push_back(sigma6_record());
  return out;
}

}  // namespace hexacycle
