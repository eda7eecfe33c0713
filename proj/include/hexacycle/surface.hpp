#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexacycle/endo.hpp"
#include "hexacycle/multipoly.hpp"

namespace hexacycle {

// The quintic surface W^2 F3(X,Y,Z) = F5(X,Y,Z) in P^3, coordinates [W:X:Y:Z].

const std::vector<std::string>& surface_vars();  // {"W","X","Y","Z"}
const MultiPoly& cubic_F3();    // over {"X","Y","Z"}
const MultiPoly& quintic_F5();  // over {"X","Y","Z"}
const MultiPoly& surface_equation();  // W^2 F3 - F5 over surface_vars()

struct SurfaceDefect {
  Rational defect;  // W^2 F3 - F5 at the integer representative
  bool on_surface = false;
};
SurfaceDefect on_surface(const P3Point& p);

// Birational map from the affine model of M_2(6) into P^3.
// Throws Error(OutsideChart) when all four coordinates vanish.
P3Point phi(const Rational& x, const Rational& y, const Rational& z);
// Throws Error(Boundary) when W^2+XY+YZ+XZ or X+Y vanishes.
std::array<Rational, 3> phi_inverse(const P3Point& p);

// [W:X:Y:Z] -> [-W:Y:Z:X]; agrees with phi o tau o phi^{-1}.
P3Point sigma6_surface(const P3Point& p);
// [W:X:Y:Z] -> [-W:Z:X:Y], the inverse generator.
P3Point sigma6_inverse_surface(const P3Point& p);

enum class ComponentKind { Line, Conic };

// A boundary curve cut out by `first` = `second` = 0. Lines use two linear
// forms; conics a plane and a quadric.
struct BoundaryComponent {
  std::string name;
  ComponentKind kind;
  MultiPoly first;
  MultiPoly second;

  bool contains(const P3Point& p) const;
};

// L1..L9 followed by C1..C14.
const std::vector<BoundaryComponent>& boundary_components();

// Exact rational points on a component, generated deterministically.
std::vector<P3Point> sample_component(const BoundaryComponent& component, std::size_t count);

struct SurfaceMembership {
  bool inside = false;
  std::vector<std::string> components;  // containing boundary curves, catalog order
  std::string reason;                   // violated inequation when outside
};

// Requires p on the surface (Error(NotOnSurface) otherwise).
SurfaceMembership s6_membership(const P3Point& p);

// The map and marked 6-cycle attached to a point of M_2(6) on the surface.
// Throws Error(Boundary) for boundary points.
MarkedCycle point_to_endomorphism(const P3Point& p);

// Mobius sending the cycle of point_to_endomorphism(p) to
// ([1:0], [W+Y:W-X], [0:1], [Z-W:X+Z], [1:1], [Y+Z:W+Z]).
Mobius change_order_mobius(const P3Point& p);
// The same map with the (W+X)u entry as typeset; kept to document that it
// does not produce the listed points.
Mobius change_order_mobius_as_printed(const P3Point& p);

struct SingularPointEntry {
  P3Point point;
  bool on_surface = false;
  bool gradient_zero = false;
  bool hessian_zero = false;
  bool inside = false;
};

struct SingularPointReport {
  std::vector<SingularPointEntry> entries;
  bool ok = false;
  std::string failure;
};

// The 11 listed singular points: gradient vanishes, only [1:0:0:0] is a
// triple point, none lies in M_2(6).
SingularPointReport singular_points_check();
bool gradient_vanishes(const P3Point& p);
bool hessian_vanishes(const P3Point& p);

struct IdentityRecord {
  std::string name;
  std::string description;
  bool verified = false;
  std::string witness;  // first nonzero term or failing sample when not verified
  std::string note;
};

// Identity catalog, verified by full expansion or exact sampling. The seed
// drives the choice of sample points for sampling-based records.
std::vector<IdentityRecord> verify_identities(std::uint64_t seed = 0);

// Record (a) with a caller-supplied product, for negative controls.
IdentityRecord boundary_product_record(const MultiPoly& product);
// The corrected degree-14 product vanishing exactly on the boundary.
MultiPoly boundary_product();

// Points on the surface through the cubic-curve parametrization:
// [j^3 : c(m)] with m = (2p+1)/(1-p^2), j = (p^2+p+1)/(1-p^2).
P3Point cubic_curve_surface_point(const Rational& p);

}  // namespace hexacycle
