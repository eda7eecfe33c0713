#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexacycle/surface.hpp"

namespace hexacycle {

enum class PointClass { Boundary, CubicCurveC, SliceX0, SliceY0, SliceZ0, Hyperplane, Sporadic };

const char* class_name(PointClass c);

struct Classification {
  PointClass kind = PointClass::Sporadic;
  std::vector<std::string> components;  // boundary curves containing the point

  // "boundary(L1|C3)", "slice-Z0", "sporadic", ...
  std::string label() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

// First match in the order boundary, cubic-curve-C, slice X0/Y0/Z0,
// hyperplane W = +-(X+Y+Z), sporadic. Throws Error(NotOnSurface).
Classification classify_point(const P3Point& p);

// Lexicographically smallest canonical point among the sigma_6 images.
P3Point orbit_representative(const P3Point& p);

// W^2 F3 = F5 mod m for the given residues of (W, X, Y, Z).
bool sieve_filter(const std::array<std::int64_t, 4>& residues, unsigned m);

struct SearchRecord {
  P3Point point;  // the orbit representative
  Classification classification;
  P3Point orbit_rep;
  BigInt height;
};

struct SearchOptions {
  long height = 1;
  unsigned shards = 1;
  std::vector<unsigned> sieve_mods{5, 7, 9, 11};
  // Optional boxes for X, Y, Z (inclusive, intersected with the height bound).
  std::optional<std::pair<long, long>> x_range, y_range, z_range;
};

struct SearchStats {
  std::uint64_t triples = 0;      // (X, Y, Z) visited
  std::uint64_t sieved_out = 0;   // rejected by some modulus
  std::uint64_t surface_points = 0;  // canonical points found before orbit dedupe
};

struct SearchResult {
  std::vector<SearchRecord> records;  // sorted by (height, orbit_rep)
  SearchStats stats;
};

constexpr long kMaxSearchHeight = 10000000;

// Every canonical point of S6 with coprime coordinates bounded by the height,
// one record per sigma_6 orbit. Output does not depend on the shard count.
SearchResult search_surface(const SearchOptions& options);

}  // namespace hexacycle
