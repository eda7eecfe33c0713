#pragma once

#include <array>

#include "hexacycle/rational.hpp"

// The defining forms of the surface, generic over the scalar or polynomial type.
namespace hexacycle::forms {

template <class T>
T f3(const T& X, const T& Y, const T& Z) {
  T s = X + Y + Z;
  return s * s * s + (X * X * Z + X * Y * Y + Y * Z * Z) + Rational(2) * X * Y * Z;
}

template <class T>
T f5(const T& X, const T& Y, const T& Z) {
  return (Z * Z * Z * X * X + X * X * X * Y * Y + Y * Y * Y * Z * Z) -
         X * Y * Z * (Y * Z + X * Y + X * Z);
}

template <class T>
T gamma(const T& W, const T& X, const T& Y, const T& Z) {
  return W * W * f3(X, Y, Z) - f5(X, Y, Z);
}

// c(m) = [-m^3+2m^2-3m+1 : m^3-m+1 : m^3-2m^2+m-1]
template <class T>
std::array<T, 3> cubic_param(const T& m) {
  T m2 = m * m;
  T m3 = m2 * m;
  return {-m3 + Rational(2) * m2 - Rational(3) * m + Rational(1), m3 - m + Rational(1),
          m3 - Rational(2) * m2 + m - Rational(1)};
}

// phi homogenized in (x:y:z:t).
template <class T>
std::array<T, 4> phi_h(const T& x, const T& y, const T& z, const T& t) {
  return {-y * t + z * t - y * z + x * y, -y * t - z * t + y * z + Rational(2) * x * t - x * y,
          y * t - z * t - y * z + x * y, y * t + z * t - x * y - y * z};
}

}  // namespace hexacycle::forms
