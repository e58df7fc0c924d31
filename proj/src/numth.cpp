#include "cycsep/numth.hpp"

#include <stdexcept>
#include <utility>

namespace cycsep {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

BigInt gcd(const BigInt& u, const BigInt& v) {
  if (u == 0 && v == 0) throw std::domain_error("gcd(0, 0) is undefined");
  if (u < 0 || v < 0) throw std::domain_error("gcd: arguments must be nonnegative");
  BigInt a = u, b = v;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ExtendedGcd extended_gcd(const BigInt& u, const BigInt& v) {
  if (u == 0 && v == 0) throw std::domain_error("extended_gcd(0, 0) is undefined");
  BigInt old_r = u, r = v;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt coprime_shift(const BigInt& a, const BigInt& m, const BigInt& d) {
  if (m < 1 || d < 1) throw std::domain_error("coprime_shift: m and d must be positive");
  if (gcd(abs_big(a), abs_big(m)) != 1)
    throw std::domain_error("coprime_shift: requires gcd(a, m) = 1");
  for (BigInt t = 0; t < d; ++t) {
    if (gcd(abs_big(a + t * m), d) == 1) return t;
  }
  // unreachable: some shift in [0, d) is coprime to d whenever gcd(a, m) = 1
  throw std::logic_error("coprime_shift: no valid shift found");
}

UnitBezout unit_bezout(const BigInt& m, const BigInt& n) {
  if (m < 1 || n < 1) throw std::domain_error("unit_bezout: m and n must be positive");
  const BigInt d = gcd(m, n);
  const BigInt m1 = m / d;
  const BigInt n1 = n / d;
  const ExtendedGcd eg = extended_gcd(m1, n1);  // eg.s*m1 + eg.t*n1 = 1
  // Every a0 + n1*t keeps a*m1 == 1 (mod n1); pick the least t that also
  // makes a coprime to d, so gcd(a, n1*d) = gcd(a, n) = 1.
  const BigInt t = coprime_shift(eg.s, n1, d);
  BigInt a = eg.s + n1 * t;
  // Reduce into (0, n]; reduction mod n preserves both gcd(a, n) = 1 and
  // a*m == d (mod n).
  a %= n;
  if (a <= 0) a += n;
  const BigInt b = (d - a * m) / n;  // exact: a*m == d (mod n)
  UnitBezout cert{a, b, d, m, n};
  return cert;
}

bool UnitBezout::valid() const {
  if (m < 1 || n < 1) return false;
  if (a * m + b * n != d) return false;
  if (d != cycsep::gcd(m, n)) return false;
  if (cycsep::gcd(abs_big(a), n) != 1) return false;
  return a > 0 && a <= n;
}

BigInt mod_inverse(const BigInt& a, const BigInt& n) {
  if (n < 1) throw std::domain_error("mod_inverse: n must be positive");
  BigInt r = a % n;
  if (r < 0) r += n;
  if (n == 1) return 0;
  const ExtendedGcd eg = extended_gcd(r, n);
  if (eg.d != 1) throw std::domain_error("mod_inverse: argument is not a unit");
  BigInt v = eg.s % n;
  if (v < 0) v += n;
  return v;
}

}  // namespace cycsep
