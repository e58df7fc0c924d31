#include "cycsep/identity.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cycsep/count.hpp"
#include "cycsep/errors.hpp"

namespace cycsep {

void RotheParams::validate() const {
  if (x < 1 || y < 1)
    throw std::domain_error("rothe: x and y must be positive (keeps denominators nonzero)");
  if (z < 0 || N < 0) throw std::domain_error("rothe: z and N must be nonnegative");
}

BigRational rothe_lhs(const RotheParams& params) {
  params.validate();
  const BigInt x = params.x, y = params.y, z = params.z;
  BigRational sum = 0;
  for (std::int64_t k = 0; k <= params.N; ++k) {
    const BigInt left = x + k * z;
    const BigInt right = y + (params.N - k) * z;
    sum += BigRational(x * y, left * right) * BigRational(binomial(left, k)) *
           BigRational(binomial(right, params.N - k));
  }
  return sum;
}

BigRational rothe_rhs(const RotheParams& params) {
  params.validate();
  const BigInt x = params.x, y = params.y;
  const BigInt top = x + y + BigInt(params.N) * params.z;
  return BigRational(x + y, top) * BigRational(binomial(top, params.N));
}

bool rothe_verify(const RotheParams& params) { return rothe_lhs(params) == rothe_rhs(params); }

BigInt collapse_convolution(std::int64_t n1, std::int64_t m, std::int64_t p, std::int64_t k) {
  if (n1 < 1 || m < 1 || p < 1 || k < 0)
    throw std::domain_error("collapse_convolution: need n1, m, p >= 1 and k >= 0");
  if (k >= 1 && BigInt(n1) <= BigInt(p) * k)
    throw HypothesisError("collapse_convolution: requires n1 >= p*k + 1 (n1=" +
                          std::to_string(n1) + ", p=" + std::to_string(p) +
                          ", k=" + std::to_string(k) + ")");

  // cycle count on Z_{r*n1} for subset size j; the denominator r*n1 - p*j
  // stays positive because p*j <= p*k <= n1 - 1
  auto fold_target = [&](std::int64_t r, std::int64_t j) {
    const BigInt cycle = BigInt(r) * n1;
    const BigInt slack = cycle - BigInt(p) * j;
    return (BigRational(cycle, slack) * BigRational(binomial(slack, j))).as_integer();
  };

  std::vector<BigInt> partial(static_cast<std::size_t>(k) + 1);
  for (std::int64_t j = 0; j <= k; ++j) partial[static_cast<std::size_t>(j)] = fold_target(1, j);

  for (std::int64_t r = 1; r < m; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(k) + 1);
    for (std::int64_t j = 0; j <= k; ++j) {
      BigInt sum = 0;
      for (std::int64_t i = 0; i <= j; ++i)
        sum += partial[static_cast<std::size_t>(i)] * fold_target(1, j - i);
      // the pairwise convolution must match its closed pair form exactly
      if (sum != fold_target(r + 1, j))
        throw std::logic_error("collapse_convolution: fold step failed at r=" +
                               std::to_string(r) + ", j=" + std::to_string(j));
      next[static_cast<std::size_t>(j)] = sum;
    }
    partial = std::move(next);
  }
  return partial[static_cast<std::size_t>(k)];
}

}  // namespace cycsep
