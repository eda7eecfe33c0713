#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hexacycle/rational.hpp"

namespace hexacycle {

namespace detail {
// Scales to coprime integers with the first nonzero entry positive. Throws
// Error(ZeroPoint) when every entry vanishes.
std::vector<BigInt> normalize_projective(std::span<const Rational> raw);
std::vector<BigInt> normalize_projective(std::span<const BigInt> raw);
std::string format_projective(std::span<const BigInt> coords);
std::vector<BigInt> parse_projective(std::string_view text, std::size_t expected);
}  // namespace detail

// Point of projective N-space over Q, stored as its canonical integer
// representative: coprime coordinates, first nonzero coordinate positive.
template <std::size_t N>
class ProjPoint {
 public:
  static constexpr std::size_t kSize = N + 1;
  using Coords = std::array<BigInt, kSize>;

  ProjPoint() = delete;

  static ProjPoint from_rationals(std::span<const Rational> raw) {
    check_size(raw.size());
    return ProjPoint(detail::normalize_projective(raw));
  }
  static ProjPoint from_rationals(std::initializer_list<Rational> raw) {
    return from_rationals(std::span<const Rational>(raw.begin(), raw.size()));
  }
  static ProjPoint from_integers(std::span<const BigInt> raw) {
    check_size(raw.size());
    return ProjPoint(detail::normalize_projective(raw));
  }
  static ProjPoint from_integers(std::initializer_list<BigInt> raw) {
    return from_integers(std::span<const BigInt>(raw.begin(), raw.size()));
  }
  // Parses "[c0:c1:...:cN]"; entries may be rationals.
  static ProjPoint parse(std::string_view text) {
    return ProjPoint(detail::parse_projective(text, kSize));
  }

  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  const Coords& coords() const { return c_; }
  Rational coord(std::size_t i) const { return Rational(c_[i]); }

  // Naive height: max |coordinate|.
  BigInt height() const {
    BigInt h = 0;
    for (const auto& c : c_) {
      BigInt a = abs(c);
      if (a > h) h = a;
    }
    return h;
  }

  std::string str() const { return detail::format_projective(c_); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    for (std::size_t i = 0; i < kSize; ++i) {
      const int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  explicit ProjPoint(const std::vector<BigInt>& v) {
    std::copy(v.begin(), v.end(), c_.begin());
  }
  static void check_size(std::size_t n) {
    if (n != kSize) {
      throw Error(ErrorCode::InvalidArgument,
                  "projective point needs " + std::to_string(kSize) + " coordinates, got " +
                      std::to_string(n));
    }
  }

  Coords c_;
};

using P1Point = ProjPoint<1>;
using P2Point = ProjPoint<2>;
using P3Point = ProjPoint<3>;

// Affine value u/v of a point of the projective line; throws for [1:0].
inline Rational affine_value(const P1Point& p) {
  if (p[1] == 0) throw Error(ErrorCode::DivisionByZero, "point at infinity has no affine value");
  return Rational(p[0], p[1]);
}

inline P1Point affine_point(const Rational& x) { return P1Point::from_rationals({x, Rational(1)}); }

}  // namespace hexacycle
