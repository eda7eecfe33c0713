#pragma once

#include <cmath>
#include <cstdint>

namespace hexacycle::detail {

using i128 = __int128;

// Exact floor square root for 0 <= n < 2^126.
inline i128 isqrt(i128 n) {
  if (n < 2) return n;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square(i128 n, i128& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace hexacycle::detail
