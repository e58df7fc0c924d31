#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cycsep/bigint.hpp"
#include "cycsep/model.hpp"

namespace cycsep {

// Enumeration cost cap. Both limits apply: the ambient cycle size and the
// number of candidate subsets C(n, k).
struct Budget {
  std::int64_t max_n = 32;
  BigInt max_subsets = 10'000'000;
};

// Throws BudgetError when enumerating inst's k-subsets would exceed `budget`.
void check_enumeration_budget(const SeparationInstance& inst, const Budget& budget);

// C(a, b); zero when b > a.
BigInt binomial(const BigInt& a, std::int64_t b);

// n/(n-pk) * C(n-pk, k), evaluated in exact rationals with the result
// asserted integral. Throws HypothesisError unless n >= m*p*k + 1.
BigInt closed_form(const SeparationInstance& inst);

// Count of k-subsets of an n1-cycle with all pairwise circular distances
// greater than p; 1 when k = 0. Equals closed_form with m = 1. Throws
// HypothesisError when k >= 1 and n1 <= p*k.
BigInt kaplansky_count(std::int64_t n1, std::int64_t p, std::int64_t k);

// Independent oracle: filters every k-subset of Z_n through is_admissible.
BigInt brute_force_count(const SeparationInstance& inst, const Budget& budget = {});

// Yields every admissible k-subset exactly once, in lexicographic order of
// the sorted element sequences, via backtracking over forbidden offsets.
void for_each_admissible(const SeparationInstance& inst, const Budget& budget,
                         const std::function<void(const KSubset&)>& yield);

// Convenience: collects the stream of for_each_admissible.
std::vector<KSubset> enumerate_admissible(const SeparationInstance& inst,
                                          const Budget& budget = {});

// Sum over weak compositions (k_1, ..., k_m) of k of the per-class products
// of Kaplansky counts on Z_{n/m}. Requires m | n (std::domain_error) and the
// counting hypothesis (HypothesisError).
BigInt convolution_count(const SeparationInstance& inst);

struct CountReport {
  SeparationInstance instance;
  BigInt closed_form;
  std::optional<BigInt> brute_force;
  std::optional<BigInt> convolution;
  bool agree = true;  // true iff all present counts are equal

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

CountReport count_report(const SeparationInstance& inst, bool with_brute_force,
                         bool with_convolution, const Budget& budget = {});

}  // namespace cycsep
