#include "hexacycle/surface.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "hexacycle/error.hpp"
#include "hexacycle/moduli.hpp"
#include "surface_forms.hpp"

namespace hexacycle {

namespace {

const std::vector<std::string> kXYZ{"X", "Y", "Z"};

std::array<Rational, 4> rat4(const P3Point& p) {
  return {p.coord(0), p.coord(1), p.coord(2), p.coord(3)};
}

P3Point from4(const std::array<Rational, 4>& v) { return P3Point::from_rationals(v); }

// Coefficients of a linear form in W, X, Y, Z.
std::array<Rational, 4> linear_coeffs(const MultiPoly& form) {
  std::array<Rational, 4> out{};
  for (const auto& [exps, c] : form.terms()) {
    unsigned deg = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      deg += exps[i];
      if (exps[i] != 0) at = i;
    }
    if (deg != 1) throw Error(ErrorCode::InvalidArgument, "not a linear form: " + form.str());
    out[at] = c;
  }
  return out;
}

// Basis of the solution space of rows . v = 0 in Q^4.
std::vector<std::array<Rational, 4>> kernel(std::vector<std::array<Rational, 4>> rows) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = Rational(1) / rows[r][col];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < 4; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  std::vector<std::array<Rational, 4>> basis;
  for (int free = 0; free < 4; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::array<Rational, 4> v{};
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(v);
  }
  return basis;
}

std::array<Rational, 4> combo(const std::vector<std::array<Rational, 4>>& basis,
                              std::span<const long> k) {
  std::array<Rational, 4> out{};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) out[j] += Rational(k[i]) * basis[i][j];
  return out;
}

bool all_zero(const std::array<Rational, 4>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

// Small integer vectors of the given length ordered by max norm, then lexicographically.
std::vector<std::vector<long>> small_vectors(std::size_t len, long bound) {
  std::vector<std::vector<long>> out;
  for (long h = 1; h <= bound; ++h) {
    long side = 2 * h + 1;
    long total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= side;
    for (long idx = 0; idx < total; ++idx) {
      std::vector<long> v(len);
      long rest = idx, norm = 0;
      for (std::size_t i = len; i-- > 0;) {
        v[i] = rest % side - h;
        rest /= side;
        norm = std::max(norm, v[i] < 0 ? -v[i] : v[i]);
      }
      if (norm == h) out.push_back(std::move(v));
    }
  }
  return out;
}

BoundaryComponent line(const char* name, MultiPoly a, MultiPoly b) {
  return {name, ComponentKind::Line, std::move(a), std::move(b)};
}
BoundaryComponent conic(const char* name, MultiPoly a, MultiPoly b) {
  return {name, ComponentKind::Conic, std::move(a), std::move(b)};
}

}  // namespace

const std::vector<std::string>& surface_vars() {
  static const std::vector<std::string> vars{"W", "X", "Y", "Z"};
  return vars;
}

const MultiPoly& cubic_F3() {
  static const MultiPoly p = [] {
    auto v = MultiPoly::variables(kXYZ);
    return forms::f3(v[0], v[1], v[2]);
  }();
  return p;
}

const MultiPoly& quintic_F5() {
  static const MultiPoly p = [] {
    auto v = MultiPoly::variables(kXYZ);
    return forms::f5(v[0], v[1], v[2]);
  }();
  return p;
}

const MultiPoly& surface_equation() {
  static const MultiPoly p = [] {
    auto v = MultiPoly::variables(surface_vars());
    return forms::gamma(v[0], v[1], v[2], v[3]);
  }();
  return p;
}

SurfaceDefect on_surface(const P3Point& p) {
  auto c = rat4(p);
  SurfaceDefect out;
  out.defect = forms::gamma(c[0], c[1], c[2], c[3]);
  out.on_surface = out.defect.is_zero();
  return out;
}

P3Point phi(const Rational& x, const Rational& y, const Rational& z) {
  auto v = forms::phi_h<Rational>(x, y, z, 1);
  if (all_zero(v)) throw Error(ErrorCode::OutsideChart, "phi vanishes identically at this point");
  return from4(v);
}

std::array<Rational, 3> phi_inverse(const P3Point& p) {
  auto [W, X, Y, Z] = rat4(p);
  Rational d = W * W + X * Y + Y * Z + X * Z;
  if (d.is_zero()) throw Error(ErrorCode::Boundary, "W^2+XY+YZ+XZ vanishes at " + p.str());
  if ((X + Y).is_zero()) throw Error(ErrorCode::Boundary, "X+Y vanishes at " + p.str());
  return {(X + Z) * (W + Y) / d, (W + Y) / (X + Y), (W + Z) * (W + Y) / d};
}

P3Point sigma6_surface(const P3Point& p) {
  return P3Point::from_integers({-p[0], p[2], p[3], p[1]});
}

P3Point sigma6_inverse_surface(const P3Point& p) {
  return P3Point::from_integers({-p[0], p[3], p[1], p[2]});
}

bool BoundaryComponent::contains(const P3Point& p) const {
  auto c = rat4(p);
  return first.eval(c).is_zero() && second.eval(c).is_zero();
}

const std::vector<BoundaryComponent>& boundary_components() {
  static const std::vector<BoundaryComponent> catalog = [] {
    auto v = MultiPoly::variables(surface_vars());
    const MultiPoly &W = v[0], &X = v[1], &Y = v[2], &Z = v[3];
    std::vector<BoundaryComponent> c;
    c.push_back(line("L1", W - Z, Y + Z));
    c.push_back(line("L2", W - Y, Y + Z));
    c.push_back(line("L3", W - Y, X + Y));
    c.push_back(line("L4", W - X, X + Y));
    c.push_back(line("L5", W - X, X + Z));
    c.push_back(line("L6", W - Z, X + Z));
    c.push_back(line("L7", X + Y, Y - Z));
    c.push_back(line("L8", X + Y, X - Z));
    c.push_back(line("L9", X - Y, Y + Z));
    MultiPoly q1 = X * X + Y * Y + Z * Z + 3 * (X * Y + X * Z + Y * Z);
    c.push_back(conic("C1", W - (X + Y + Z), q1));
    c.push_back(conic("C2", W + (X + Y + Z), q1));
    MultiPoly q3 = X * X + X * Y + 3 * X * Z - Y * Z;
    c.push_back(conic("C3", W - X, q3));
    c.push_back(conic("C4", W + X, q3));
    MultiPoly q5 = Y * Y + Y * Z + 3 * Y * X - Z * X;
    c.push_back(conic("C5", W - Y, q5));
    c.push_back(conic("C6", W + Y, q5));
    MultiPoly q7 = Z * Z + Z * X + 3 * Z * Y - X * Y;
    c.push_back(conic("C7", W - Z, q7));
    c.push_back(conic("C8", W + Z, q7));
    c.push_back(conic("C9", Z - X, W * (Y + 3 * X) + X * (X - Y)));
    c.push_back(conic("C10", Z - X, W * (Y + 3 * X) - X * (X - Y)));
    c.push_back(conic("C11", Y - Z, W * (X + 3 * Z) + Z * (Z - X)));
    c.push_back(conic("C12", Y - Z, W * (X + 3 * Z) - Z * (Z - X)));
    c.push_back(conic("C13", X - Y, W * (Z + 3 * Y) + Y * (Y - Z)));
    c.push_back(conic("C14", X - Y, W * (Z + 3 * Y) - Y * (Y - Z)));
    return c;
  }();
  return catalog;
}

std::vector<P3Point> sample_component(const BoundaryComponent& component, std::size_t count) {
  std::vector<P3Point> out;
  std::set<P3Point> seen;
  auto take = [&](const std::array<Rational, 4>& v) {
    if (all_zero(v)) return;
    P3Point p = from4(v);
    if (seen.insert(p).second) out.push_back(p);
  };

  if (component.kind == ComponentKind::Line) {
    auto basis = kernel({linear_coeffs(component.first), linear_coeffs(component.second)});
    for (const auto& k : small_vectors(2, 64)) {
      if (out.size() >= count) break;
      take(combo(basis, k));
    }
    return out;
  }

  // Conic: a point P0 on it, then the second intersection of the pencil of
  // lines through P0 within the plane.
  auto basis = kernel({linear_coeffs(component.first)});
  const MultiPoly& q = component.second;
  auto qv = [&](const std::array<Rational, 4>& v) { return q.eval(v); };
  auto candidates = small_vectors(3, 6);
  std::optional<std::array<Rational, 4>> p0;
  for (const auto& k : candidates) {
    auto v = combo(basis, k);
    if (!all_zero(v) && qv(v).is_zero()) {
      p0 = v;
      break;
    }
  }
  if (!p0) return out;
  take(*p0);
  Rational q0 = qv(*p0);
  for (const auto& k : small_vectors(3, 16)) {
    if (out.size() >= count) break;
    auto d = combo(basis, k);
    std::array<Rational, 4> sum{};
    for (std::size_t j = 0; j < 4; ++j) sum[j] = (*p0)[j] + d[j];
    Rational qd = qv(d);
    Rational twice_b = qv(sum) - q0 - qd;
    std::array<Rational, 4> r{};
    for (std::size_t j = 0; j < 4; ++j) r[j] = qd * (*p0)[j] - twice_b * d[j];
    take(r);
  }
  return out;
}

SurfaceMembership s6_membership(const P3Point& p) {
  if (!on_surface(p).on_surface)
    throw Error(ErrorCode::NotOnSurface, p.str() + " does not satisfy W^2 F3 = F5");
  SurfaceMembership out;
  for (const auto& c : boundary_components())
    if (c.contains(p)) out.components.push_back(c.name);

  auto [W, X, Y, Z] = rat4(p);
  static const char* names[] = {"W", "X", "Y", "Z"};
  std::array<Rational, 4> sq{W * W, X * X, Y * Y, Z * Z};
  if ((W * W + X * Y + Y * Z + X * Z).is_zero()) {
    out.reason = "W^2+XY+YZ+XZ = 0";
  } else {
    for (std::size_t i = 0; i < 4 && out.reason.empty(); ++i)
      for (std::size_t j = i + 1; j < 4 && out.reason.empty(); ++j)
        if (sq[i] == sq[j]) out.reason = std::string(names[i]) + "^2 = " + names[j] + "^2";
  }
  out.inside = out.reason.empty();
  return out;
}

MarkedCycle point_to_endomorphism(const P3Point& p) {
  auto m = s6_membership(p);
  if (!m.inside) throw Error(ErrorCode::Boundary, p.str() + " is a boundary point: " + m.reason);
  auto [W, X, Y, Z] = rat4(p);
  Rational d = W * W + X * Y + X * Z + Y * Z;
  Rational s = W * (X + Y + 2 * Z);
  Rational a1 = (W - X) * (s + Z * (Y - X)) / (d * (X - Z)) - 1;
  Rational a2 = (W + Y) * (W + Z) * (X - W) * (s + X * Y - Z * Z) / (d * d * (X - Z));
  Rational a4 = (Y + Z) * (W - Z) * (X - W) * (W * (2 * X + Y + Z) + Y * Z - X * X) /
                    (d * (X + Z) * (Y + W) * (X - Z)) -
                1;
  QuadMap f = QuadMap::from_rationals({1, a1, a2, 1, a4, 0});
  std::vector<P1Point> cycle{
      P1Point::from_integers({0, 1}),
      P1Point::from_integers({1, 0}),
      P1Point::from_integers({1, 1}),
      P1Point::from_rationals({(X + Z) * (W + Y), d}),
      P1Point::from_rationals({W + Y, X + Y}),
      P1Point::from_rationals({(W + Z) * (W + Y), d}),
  };
  verify_cycle(f, cycle);
  return {f, cycle};
}

Mobius change_order_mobius(const P3Point& p) {
  auto [W, X, Y, Z] = rat4(p);
  return Mobius::from_rationals(W + Y, -(W + Y), W - X, 0);
}

Mobius change_order_mobius_as_printed(const P3Point& p) {
  auto [W, X, Y, Z] = rat4(p);
  return Mobius::from_rationals(W + X, -(W + Y), W - X, 0);
}

namespace {

bool polys_vanish(const std::vector<MultiPoly>& polys, const P3Point& p) {
  auto c = rat4(p);
  return std::all_of(polys.begin(), polys.end(),
                     [&](const MultiPoly& q) { return q.eval(c).is_zero(); });
}

const std::vector<MultiPoly>& gradient_polys() {
  static const std::vector<MultiPoly> g = [] {
    std::vector<MultiPoly> out;
    for (const auto& v : surface_vars()) out.push_back(surface_equation().derivative(v));
    return out;
  }();
  return g;
}

const std::vector<MultiPoly>& hessian_polys() {
  static const std::vector<MultiPoly> h = [] {
    std::vector<MultiPoly> out;
    const auto& vars = surface_vars();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j)
        out.push_back(gradient_polys()[i].derivative(vars[j]));
    return out;
  }();
  return h;
}

}  // namespace

bool gradient_vanishes(const P3Point& p) { return polys_vanish(gradient_polys(), p); }
bool hessian_vanishes(const P3Point& p) { return polys_vanish(hessian_polys(), p); }

SingularPointReport singular_points_check() {
  static const std::vector<std::array<long, 4>> listed{
      {1, 0, 0, 0},   {0, 1, 1, 1},   {0, 1, 0, 0},  {0, 0, 1, 0},
      {0, 0, 0, 1},   {-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1},
      {1, -1, 1, 1},  {1, 1, -1, 1},  {1, 1, 1, -1},
  };
  SingularPointReport report;
  report.ok = true;
  for (const auto& raw : listed) {
    P3Point p = P3Point::from_integers({raw[0], raw[1], raw[2], raw[3]});
    SingularPointEntry e{p};
    e.on_surface = on_surface(p).on_surface;
    e.gradient_zero = gradient_vanishes(p);
    e.hessian_zero = hessian_vanishes(p);
    e.inside = e.on_surface && s6_membership(p).inside;
    bool triple = raw == std::array<long, 4>{1, 0, 0, 0};
    std::string fail;
    if (!e.on_surface) fail = "not on the surface";
    else if (!e.gradient_zero) fail = "gradient does not vanish";
    else if (e.hessian_zero != triple) fail = triple ? "Hessian nonzero at the triple point"
                                                     : "Hessian vanishes";
    else if (e.inside) fail = "lies in M_2(6)";
    if (!fail.empty() && report.ok) {
      report.ok = false;
      report.failure = p.str() + ": " + fail;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

P3Point cubic_curve_surface_point(const Rational& p) {
  Rational den = 1 - p * p;
  if (den.is_zero()) throw Error(ErrorCode::ExcludedParameter, "p = +-1 is a pole of the conic parametrization");
  Rational j = (p * p + p + 1) / den;
  Rational m = (2 * p + 1) / den;
  auto c = forms::cubic_param(m);
  return P3Point::from_rationals({j * j * j, c[0], c[1], c[2]});
}

}  // namespace hexacycle
