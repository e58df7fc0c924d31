#pragma once

#include <cstdint>

#include "cycsep/bigint.hpp"
#include "cycsep/rational.hpp"

namespace cycsep {

// Parameters of the binomial convolution identity
//   sum_{k=0..N} x*y / ((x+kz)(y+(N-k)z)) * C(x+kz, k) * C(y+(N-k)z, N-k)
//     = (x+y)/(x+y+Nz) * C(x+y+Nz, N).
// x, y > 0 and z, N >= 0 keep every denominator positive and every binomial
// upper argument a nonnegative integer.
struct RotheParams {
  std::int64_t x = 1;
  std::int64_t y = 1;
  std::int64_t z = 0;
  std::int64_t N = 0;

  void validate() const;  // throws std::domain_error outside the regime above

  friend bool operator==(const RotheParams&, const RotheParams&) = default;
};

// Exact sum side of the identity.
BigRational rothe_lhs(const RotheParams& params);

// Exact closed side of the identity.
BigRational rothe_rhs(const RotheParams& params);

// Exact equality of the two sides; must hold for all valid parameters.
bool rothe_verify(const RotheParams& params);

// Collapses the m-fold convolution of per-class cycle counts on Z_{n1} by
// left-folding pairs: after r folds the partial convolution must equal the
// single-cycle count on Z_{(r+1)*n1}, which is checked exactly at every
// step before proceeding. Returns the fully collapsed count, equal to
// convolution_count on (n1*m, m, p, k). Requires n1 >= p*k + 1.
BigInt collapse_convolution(std::int64_t n1, std::int64_t m, std::int64_t p, std::int64_t k);

}  // namespace cycsep
