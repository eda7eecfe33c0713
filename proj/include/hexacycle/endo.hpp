#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hexacycle/projpoint.hpp"

namespace hexacycle {

// Resultant of a0 u^2 + a1 uv + a2 v^2 and a3 u^2 + a4 uv + a5 v^2.
Rational resultant(std::span<const Rational, 6> a);
BigInt resultant(std::span<const BigInt, 6> a);

// Invertible projective-linear map [u:v] -> [a u + b v : c u + d v], stored
// with coprime entries and the first nonzero entry positive.
class Mobius {
 public:
  Mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);
  static Mobius from_rationals(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d);
  static Mobius identity() { return Mobius(1, 0, 0, 1); }

  // The unique map sending (p, q, r) to ([0:1], [1:0], [1:1]).
  static Mobius standardizer(const P1Point& p, const P1Point& q, const P1Point& r);

  const BigInt& a() const { return m_[0]; }
  const BigInt& b() const { return m_[1]; }
  const BigInt& c() const { return m_[2]; }
  const BigInt& d() const { return m_[3]; }

  P1Point apply(const P1Point& p) const;
  Mobius inverse() const;
  // (*this) after rhs, i.e. x -> this(rhs(x)).
  Mobius compose(const Mobius& rhs) const;
  BigInt determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  std::string str() const;

  friend bool operator==(const Mobius&, const Mobius&) = default;

 private:
  std::array<BigInt, 4> m_;
};

// Degree-2 endomorphism [u:v] -> [a0u^2+a1uv+a2v^2 : a3u^2+a4uv+a5v^2] of the
// projective line, held as a canonical point of P^5 with nonzero resultant.
class QuadMap {
 public:
  // Throws Error(DegenerateMap) when the resultant vanishes.
  explicit QuadMap(const ProjPoint<5>& coeffs);
  static QuadMap from_rationals(std::span<const Rational, 6> coeffs);
  static QuadMap from_rationals(std::initializer_list<Rational> coeffs);

  const ProjPoint<5>& coeffs() const { return coeffs_; }
  std::array<Rational, 6> rational_coeffs() const;
  BigInt resultant() const;

  P1Point eval(const P1Point& p) const;
  // p after `steps` applications.
  P1Point iterate(const P1Point& p, std::size_t steps) const;

  friend bool operator==(const QuadMap&, const QuadMap&) = default;

 private:
  ProjPoint<5> coeffs_;
};

// g o f o g^{-1}.
QuadMap conjugate(const QuadMap& f, const Mobius& g);

struct OrbitReport {
  std::vector<P1Point> points;  // p, f(p), ..., as far as iterated
  bool cycle_found = false;
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

// Iterates up to max_steps times, stopping at the first repeated point.
OrbitReport orbit(const QuadMap& f, const P1Point& start, std::size_t max_steps);

// A map together with an ordered cycle p1 -> p2 -> ... -> pn -> p1 of
// pairwise distinct points.
struct MarkedCycle {
  QuadMap map;
  std::vector<P1Point> points;
};

// Throws Error(InvalidArgument) if the points are not distinct or not cycled
// by the map, Error(NotMinimalPeriod) if p1 has a smaller period.
void verify_cycle(const QuadMap& f, std::span<const P1Point> points);

// Smallest d in 1..bound with f^d(p) = p, if any.
std::optional<std::size_t> minimal_period(const QuadMap& f, const P1Point& p, std::size_t bound);

// The unique quadratic map realizing six distinct points as a 6-cycle, built
// by standardizing the first three points and applying the closed-form
// inverse of the affine model. Throws Error(DegenerateMap) when no degree-2
// map realizes the cycle, Error(NotMinimalPeriod) if the period is smaller.
MarkedCycle cycle_to_endomorphism(std::span<const P1Point> points);

}  // namespace hexacycle
