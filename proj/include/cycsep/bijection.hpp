#pragma once

#include <cstdint>

#include "cycsep/count.hpp"
#include "cycsep/model.hpp"

namespace cycsep {

// Multiplication-by-a-unit map on Z_n that carries the family avoiding
// multiples of m onto the family avoiding multiples of d = gcd(m, n).
struct UnitMap {
  std::int64_t n = 1;
  std::int64_t a = 1;      // unit: gcd(a, n) = 1, a * m == d (mod n)
  std::int64_t a_inv = 1;  // a * a_inv == 1 (mod n)
  std::int64_t source_m = 1;
  std::int64_t target_d = 1;  // gcd(source_m, n)

  bool valid() const;

  friend bool operator==(const UnitMap&, const UnitMap&) = default;
};

// Derives the unit map from the canonical unit Bezout certificate of (m, n).
UnitMap build_unit_map(std::int64_t m, std::int64_t n);

// {a*x mod n : x in X}, re-canonicalized. Throws std::domain_error when
// X.n != map.n. Cardinality is preserved (a is a unit).
KSubset apply_map(const UnitMap& map, const KSubset& X);

// {a_inv*y mod n : y in Y}; inverts apply_map exactly.
KSubset invert_map(const UnitMap& map, const KSubset& Y);

// Exhaustively checks that apply_map is an injection of the (n, m, p, k)
// family into the (n, gcd(m,n), p, k) family and invert_map maps back into
// the source family. Must always return true; used as a test oracle.
// The instance's m field is the source step of the map.
bool verify_bijection(const SeparationInstance& inst, const Budget& budget = {});

}  // namespace cycsep
