#include "hexacycle/search.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "hexacycle/error.hpp"
#include "intmath.hpp"

namespace hexacycle {

using detail::i128;

const char* class_name(PointClass c) {
  switch (c) {
    case PointClass::Boundary: return "boundary";
    case PointClass::CubicCurveC: return "cubic-curve-C";
    case PointClass::SliceX0: return "slice-X0";
    case PointClass::SliceY0: return "slice-Y0";
    case PointClass::SliceZ0: return "slice-Z0";
    case PointClass::Hyperplane: return "hyperplane";
    case PointClass::Sporadic: return "sporadic";
  }
  return "?";
}

std::string Classification::label() const {
  std::string out = class_name(kind);
  if (kind == PointClass::Boundary && !components.empty()) {
    out += '(';
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) out += '|';
      out += components[i];
    }
    out += ')';
  }
  return out;
}

Classification classify_point(const P3Point& p) {
  auto m = s6_membership(p);
  Classification c;
  if (!m.inside) {
    c.kind = PointClass::Boundary;
    c.components = m.components;
    return c;
  }
  const BigInt &W = p[0], &X = p[1], &Y = p[2], &Z = p[3];
  BigInt lhs = X * X * X + Y * Y * Y + Z * Z * Z;
  BigInt rhs = X * X * Y + Y * Y * Z + Z * Z * X;
  BigInt s = X + Y + Z;
  if (lhs == rhs) c.kind = PointClass::CubicCurveC;
  else if (X == 0) c.kind = PointClass::SliceX0;
  else if (Y == 0) c.kind = PointClass::SliceY0;
  else if (Z == 0) c.kind = PointClass::SliceZ0;
  else if (W == s || W == -s) c.kind = PointClass::Hyperplane;
  else c.kind = PointClass::Sporadic;
  return c;
}

P3Point orbit_representative(const P3Point& p) {
  P3Point best = p, q = p;
  for (int i = 0; i < 5; ++i) {
    q = sigma6_surface(q);
    if (q < best) best = q;
  }
  return best;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

template <class T>
T f3_int(T X, T Y, T Z) {
  T s = X + Y + Z;
  return s * s * s + (X * X * Z + X * Y * Y + Y * Z * Z) + 2 * X * Y * Z;
}

template <class T>
T f5_int(T X, T Y, T Z) {
  return (Z * Z * Z * X * X + X * X * X * Y * Y + Y * Y * Y * Z * Z) -
         X * Y * Z * (Y * Z + X * Y + X * Z);
}

// For each (X, Y, Z) mod m: does some W mod m satisfy W^2 F3 = F5?
struct SieveTable {
  unsigned m;
  std::vector<char> ok;

  explicit SieveTable(unsigned modulus) : m(modulus), ok(std::size_t(m) * m * m, 0) {
    for (unsigned x = 0; x < m; ++x)
      for (unsigned y = 0; y < m; ++y)
        for (unsigned z = 0; z < m; ++z)
          for (unsigned w = 0; w < m && !ok[index(x, y, z)]; ++w)
            if (sieve_filter({w, x, y, z}, m)) ok[index(x, y, z)] = 1;
  }
  std::size_t index(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return (std::size_t(x) * m + std::size_t(y)) * m + std::size_t(z);
  }
  bool pass(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return ok[index(mod(x, m), mod(y, m), mod(z, m))] != 0;
  }
};

struct Box {
  long lo[3];
  long hi[3];
};

struct ShardOutput {
  std::vector<P3Point> points;
  SearchStats stats;
};

void emit(ShardOutput& out, std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z) {
  if (detail::gcd64(detail::gcd64(w, x), detail::gcd64(y, z)) != 1) return;
  out.points.push_back(P3Point::from_integers({w, x, y, z}));
  ++out.stats.surface_points;
}

void run_shard(const Box& box, long height, bool restricted, unsigned shard, unsigned shards,
               const std::vector<SieveTable>& sieves, ShardOutput& out) {
  for (long x = box.lo[0]; x <= box.hi[0]; ++x) {
    if (mod(x, shards) != shard) continue;
    for (long y = box.lo[1]; y <= box.hi[1]; ++y) {
      for (long z = box.lo[2]; z <= box.hi[2]; ++z) {
        // Without a box, (x,y,z) and -(x,y,z) give the same points.
        if (!restricted) {
          long first = x != 0 ? x : (y != 0 ? y : z);
          if (first < 0) continue;
        }
        ++out.stats.triples;
        if (x == 0 && y == 0 && z == 0) {
          emit(out, 1, 0, 0, 0);
          continue;
        }
        bool pass = std::all_of(sieves.begin(), sieves.end(),
                                [&](const SieveTable& t) { return t.pass(x, y, z); });
        if (!pass) {
          ++out.stats.sieved_out;
          continue;
        }
        i128 f3 = f3_int<i128>(x, y, z);
        i128 f5 = f5_int<i128>(x, y, z);
        if (f3 == 0) {
          if (f5 != 0) continue;
          for (long w = -height; w <= height; ++w) emit(out, w, x, y, z);
          continue;
        }
        if (f5 % f3 != 0) continue;
        i128 root;
        if (!detail::is_square(f5 / f3, root) || root > height) continue;
        auto w = static_cast<std::int64_t>(root);
        emit(out, w, x, y, z);
        if (w != 0) emit(out, -w, x, y, z);
      }
    }
  }
}

}  // namespace

bool sieve_filter(const std::array<std::int64_t, 4>& r, unsigned m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "sieve modulus must be at least 2");
  std::int64_t M = m;
  std::int64_t w = mod(r[0], M), x = mod(r[1], M), y = mod(r[2], M), z = mod(r[3], M);
  std::int64_t f3 = mod(f3_int<i128>(x, y, z), M);
  std::int64_t f5 = mod(f5_int<i128>(x, y, z), M);
  return mod(w * w % M * f3 - f5, M) == 0;
}

SearchResult search_surface(const SearchOptions& options) {
  long h = options.height;
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "height must be at least 1");
  if (h > kMaxSearchHeight)
    throw Error(ErrorCode::InvalidArgument, "height above 10^7 is not supported");
  if (options.shards < 1) throw Error(ErrorCode::InvalidArgument, "shards must be at least 1");
  for (unsigned m : options.sieve_mods)
    if (m < 2 || m > 64)
      throw Error(ErrorCode::InvalidArgument, "sieve moduli must lie in 2..64");

  Box box{{-h, -h, -h}, {h, h, h}};
  const std::optional<std::pair<long, long>>* ranges[3] = {&options.x_range, &options.y_range,
                                                          &options.z_range};
  bool restricted = false;
  for (int i = 0; i < 3; ++i) {
    if (!*ranges[i]) continue;
    restricted = true;
    box.lo[i] = std::max(box.lo[i], (*ranges[i])->first);
    box.hi[i] = std::min(box.hi[i], (*ranges[i])->second);
  }

  std::vector<SieveTable> sieves;
  for (unsigned m : options.sieve_mods) sieves.emplace_back(m);

  std::vector<ShardOutput> outs(options.shards);
  if (options.shards == 1) {
    run_shard(box, h, restricted, 0, 1, sieves, outs[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < options.shards; ++s)
      threads.emplace_back(run_shard, std::cref(box), h, restricted, s, options.shards,
                           std::cref(sieves), std::ref(outs[s]));
    for (auto& t : threads) t.join();
  }

  SearchResult result;
  std::set<P3Point> reps;
  for (const auto& o : outs) {
    result.stats.triples += o.stats.triples;
    result.stats.sieved_out += o.stats.sieved_out;
    result.stats.surface_points += o.stats.surface_points;
    for (const auto& p : o.points) reps.insert(orbit_representative(p));
  }
  for (const auto& rep : reps) {
    result.records.push_back({rep, classify_point(rep), rep, rep.height()});
  }
  std::sort(result.records.begin(), result.records.end(), [](const auto& a, const auto& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.orbit_rep < b.orbit_rep;
  });
  return result;
}

}  // namespace hexacycle
