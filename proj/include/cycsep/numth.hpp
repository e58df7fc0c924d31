#pragma once

#include "cycsep/bigint.hpp"

namespace cycsep {

// Bezout certificate for (m, n) whose multiplier a is additionally a unit
// mod n. Canonical form: a is the unique representative in (0, n] of its
// residue class (a < n whenever n > 1; a = 1 when n = 1).
struct UnitBezout {
  BigInt a;  // unit multiplier, gcd(a, n) = 1
  BigInt b;  // cofactor
  BigInt d;  // gcd(m, n)
  BigInt m;
  BigInt n;

  bool valid() const;  // checks a*m + b*n == d, d == gcd(m, n), gcd(a, n) == 1
};

// gcd of two nonnegative integers; gcd(u, 0) = u. Throws std::domain_error
// when both are zero.
BigInt gcd(const BigInt& u, const BigInt& v);

struct ExtendedGcd {
  BigInt d;  // gcd(|u|, |v|), nonnegative
  BigInt s;
  BigInt t;  // s*u + t*v == d
};

// Bezout coefficients for arbitrary-sign inputs, d normalized nonnegative.
// Throws std::domain_error when both inputs are zero.
ExtendedGcd extended_gcd(const BigInt& u, const BigInt& v);

// Least t in [0, d) such that gcd(a + t*m, d) = 1. Requires gcd(a, m) = 1,
// which guarantees such a t exists; throws std::domain_error otherwise.
BigInt coprime_shift(const BigInt& a, const BigInt& m, const BigInt& d);

// Builds the canonical unit-multiplier certificate for m, n >= 1: solves
// a0*m1 + b0*n1 = 1 for m = m1*d, n = n1*d, shifts a0 along the family
// a0 + n1*t until it is also coprime to d, then reduces a into (0, n].
UnitBezout unit_bezout(const BigInt& m, const BigInt& n);

// Unique v in [0, n) with a*v == 1 (mod n). Throws std::domain_error when
// gcd(a, n) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& n);

}  // namespace cycsep
