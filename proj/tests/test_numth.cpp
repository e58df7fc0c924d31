#include <doctest.h>

#include <stdexcept>

#include "cycsep/numth.hpp"
#include "oracles.hpp"

using cycsep::BigInt;

TEST_CASE("gcd on small inputs") {
  CHECK(cycsep::gcd(4, 6) == 2);
  CHECK(cycsep::gcd(1, 7) == 1);
  CHECK(cycsep::gcd(12, 18) == 6);
  CHECK(cycsep::gcd(5, 0) == 5);
  CHECK(cycsep::gcd(0, 5) == 5);
  CHECK_THROWS_AS(cycsep::gcd(0, 0), std::domain_error);
}

TEST_CASE("gcd agrees with the divisor-scan oracle") {
  for (std::int64_t u = 0; u <= 60; ++u)
    for (std::int64_t v = 0; v <= 60; ++v) {
      if (u == 0 && v == 0) continue;
      CHECK(cycsep::gcd(u, v) == testoracle::divisor_scan_gcd(u, v));
    }
}

TEST_CASE("extended_gcd solves the Bezout equation") {
  auto eg = cycsep::extended_gcd(3, 2);
  CHECK(eg.d == 1);
  CHECK(eg.s * 3 + eg.t * 2 == 1);

  eg = cycsep::extended_gcd(4, 6);
  CHECK(eg.d == 2);
  CHECK(eg.s * 4 + eg.t * 6 == 2);

  eg = cycsep::extended_gcd(5, 0);
  CHECK(eg.d == 5);
  CHECK(eg.s == 1);
  CHECK(eg.t == 0);

  CHECK_THROWS_AS(cycsep::extended_gcd(0, 0), std::domain_error);
}

TEST_CASE("extended_gcd handles signs and matches gcd of magnitudes") {
  for (std::int64_t u = -40; u <= 40; ++u)
    for (std::int64_t v = -40; v <= 40; ++v) {
      if (u == 0 && v == 0) continue;
      const auto eg = cycsep::extended_gcd(u, v);
      CHECK(eg.d >= 0);
      CHECK(eg.s * u + eg.t * v == eg.d);
      CHECK(eg.d == testoracle::divisor_scan_gcd(u < 0 ? -u : u, v < 0 ? -v : v));
    }
}

TEST_CASE("coprime_shift examples") {
  CHECK(cycsep::coprime_shift(1, 2, 4) == 0);
  CHECK(cycsep::coprime_shift(3, 5, 6) == 2);
  CHECK(cycsep::coprime_shift(2, 3, 4) == 1);
  CHECK_THROWS_AS(cycsep::coprime_shift(2, 4, 5), std::domain_error);  // gcd(a, m) = 2
}

TEST_CASE("coprime_shift returns the least valid shift") {
  auto big_abs = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };
  for (std::int64_t a = 1; a <= 20; ++a)
    for (std::int64_t m = 1; m <= 20; ++m) {
      if (testoracle::divisor_scan_gcd(a, m) != 1) continue;
      for (std::int64_t d = 1; d <= 20; ++d) {
        const BigInt t = cycsep::coprime_shift(a, m, d);
        CHECK(t < d);
        CHECK(cycsep::gcd(big_abs(BigInt(a) + t * m), d) == 1);
        for (BigInt s = 0; s < t; ++s)
          CHECK(cycsep::gcd(big_abs(BigInt(a) + s * m), d) != 1);
      }
    }
}

TEST_CASE("unit_bezout canonical examples") {
  const auto c1 = cycsep::unit_bezout(4, 6);
  CHECK(c1.d == 2);
  CHECK(c1.a == 5);
  CHECK(c1.b == -3);
  CHECK(c1.valid());

  const auto c2 = cycsep::unit_bezout(1, 9);
  CHECK(c2.d == 1);
  CHECK(c2.a == 1);
  CHECK(c2.b == 0);
  CHECK(c2.valid());

  const auto c3 = cycsep::unit_bezout(6, 4);
  CHECK(c3.d == 2);
  CHECK(c3.valid());
}

TEST_CASE("unit_bezout certificate invariants on a grid") {
  for (std::int64_t m = 1; m <= 60; ++m)
    for (std::int64_t n = 1; n <= 60; ++n) {
      const auto cert = cycsep::unit_bezout(m, n);
      CHECK(cert.a * m + cert.b * n == cert.d);
      CHECK(cert.d == cycsep::gcd(m, n));
      CHECK(cycsep::gcd(cert.a, n) == 1);
      CHECK(cert.a > 0);
      if (n > 1)
        CHECK(cert.a < n);
      else
        CHECK(cert.a == 1);  // the interval (0, 1) is empty; 1 is the canonical unit
    }
}

TEST_CASE("unit_bezout is deterministic") {
  for (std::int64_t m : {3, 4, 12, 35})
    for (std::int64_t n : {5, 6, 18, 49}) {
      const auto a = cycsep::unit_bezout(m, n);
      const auto b = cycsep::unit_bezout(m, n);
      CHECK(a.a == b.a);
      CHECK(a.b == b.b);
    }
}

TEST_CASE("mod_inverse examples") {
  CHECK(cycsep::mod_inverse(1, 5) == 1);
  CHECK(cycsep::mod_inverse(5, 6) == 5);
  CHECK(cycsep::mod_inverse(3, 7) == 5);
  CHECK(cycsep::mod_inverse(-1, 7) == 6);
  CHECK_THROWS_AS(cycsep::mod_inverse(2, 4), std::domain_error);
  CHECK_THROWS_AS(cycsep::mod_inverse(0, 5), std::domain_error);
}

TEST_CASE("mod_inverse roundtrip for all units, n <= 100") {
  for (std::int64_t n = 1; n <= 100; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      if (testoracle::divisor_scan_gcd(a, n) != 1) continue;  // gcd(0, n) = n keeps a = 0 out
      const BigInt inv = cycsep::mod_inverse(a, n);
      CHECK(inv >= 0);
      CHECK(inv < n);
      CHECK((BigInt(a) * inv) % n == (n == 1 ? 0 : 1));
      CHECK(cycsep::mod_inverse(inv, n) == a % n);
    }
}
