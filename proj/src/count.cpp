#include "cycsep/count.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cycsep/errors.hpp"
#include "cycsep/rational.hpp"

namespace cycsep {

namespace {

void require_hypothesis(const SeparationInstance& inst) {
  if (!inst.satisfies_hypothesis())
    throw HypothesisError("instance (n=" + std::to_string(inst.n) +
                          ", m=" + std::to_string(inst.m) + ", p=" + std::to_string(inst.p) +
                          ", k=" + std::to_string(inst.k) +
                          ") violates the counting hypothesis n >= m*p*k + 1");
}

// n/(n - p*k) * C(n - p*k, k) with the integrality of the result asserted.
BigInt cycle_count(std::int64_t n, std::int64_t p, std::int64_t k) {
  const BigInt slack = BigInt(n) - BigInt(p) * k;  // > 0 under the hypothesis
  const BigRational value = BigRational(n, slack) * BigRational(binomial(slack, k));
  return value.as_integer();
}

}  // namespace

void check_enumeration_budget(const SeparationInstance& inst, const Budget& budget) {
  inst.validate();
  if (inst.n > budget.max_n)
    throw BudgetError("enumeration budget exceeded: n=" + std::to_string(inst.n) + " > max_n=" +
                      std::to_string(budget.max_n));
  const BigInt candidates = binomial(BigInt(inst.n), inst.k);
  if (candidates > budget.max_subsets)
    throw BudgetError("enumeration budget exceeded: C(n, k)=" + candidates.str() +
                      " > max_subsets=" + budget.max_subsets.str());
}

BigInt binomial(const BigInt& a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::domain_error("binomial: arguments must be nonnegative");
  if (b > a) return 0;
  if (BigInt(b) > a - b) b = static_cast<std::int64_t>(BigInt(a - b));
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a-b+i, i) at each step
  }
  return result;
}

BigInt closed_form(const SeparationInstance& inst) {
  inst.validate();
  require_hypothesis(inst);
  return cycle_count(inst.n, inst.p, inst.k);
}

BigInt kaplansky_count(std::int64_t n1, std::int64_t p, std::int64_t k) {
  if (n1 < 1 || p < 1 || k < 0)
    throw std::domain_error("kaplansky_count: need n1, p >= 1 and k >= 0");
  if (k == 0) return 1;
  if (BigInt(n1) <= BigInt(p) * k)
    throw HypothesisError("kaplansky_count: requires n1 >= p*k + 1 (n1=" + std::to_string(n1) +
                          ", p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")");
  return cycle_count(n1, p, k);
}

BigInt brute_force_count(const SeparationInstance& inst, const Budget& budget) {
  check_enumeration_budget(inst, budget);
  const std::int64_t n = inst.n;
  const std::int64_t k = inst.k;
  if (k > n) return 0;
  if (k == 0) return 1;

  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (std::int64_t r : forbidden_residues(inst)) mask[static_cast<std::size_t>(r)] = true;

  // Plain odometer over all C(n, k) index combinations; no pruning, so this
  // stays an oracle independent of the backtracking enumerator.
  std::vector<std::int64_t> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (mask[static_cast<std::size_t>(c[j] - c[i])]) {
          ok = false;
          break;
        }
    count += ok ? 1 : 0;

    std::int64_t pos = k - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++c[static_cast<std::size_t>(pos)];
    for (std::int64_t i = pos + 1; i < k; ++i)
      c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)] + 1;
  }
  return BigInt(count);
}

void for_each_admissible(const SeparationInstance& inst, const Budget& budget,
                         const std::function<void(const KSubset&)>& yield) {
  check_enumeration_budget(inst, budget);
  const std::int64_t n = inst.n;
  const std::int64_t k = inst.k;
  if (k > n) return;
  if (k == 0) {
    yield(KSubset(n, {}));
    return;
  }

  const std::vector<std::int64_t> forbidden = forbidden_residues(inst);
  // blocked[x] counts how many chosen elements forbid position x
  std::vector<int> blocked(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(k));

  auto mark = [&](std::int64_t x, int delta) {
    for (std::int64_t f : forbidden) blocked[static_cast<std::size_t>((x + f) % n)] += delta;
  };

  // depth-first in increasing element order = lexicographic output
  std::function<void(std::int64_t)> descend = [&](std::int64_t start) {
    if (static_cast<std::int64_t>(chosen.size()) == k) {
      yield(KSubset(n, chosen));
      return;
    }
    const std::int64_t remaining = k - static_cast<std::int64_t>(chosen.size());
    for (std::int64_t x = start; x <= n - remaining; ++x) {
      if (blocked[static_cast<std::size_t>(x)] > 0) continue;
      chosen.push_back(x);
      mark(x, +1);
      descend(x + 1);
      mark(x, -1);
      chosen.pop_back();
    }
  };
  descend(0);
}

std::vector<KSubset> enumerate_admissible(const SeparationInstance& inst, const Budget& budget) {
  std::vector<KSubset> out;
  for_each_admissible(inst, budget, [&](const KSubset& X) { out.push_back(X); });
  return out;
}

BigInt convolution_count(const SeparationInstance& inst) {
  inst.validate();
  if (inst.n % inst.m != 0) throw std::domain_error("convolution_count: m must divide n");
  require_hypothesis(inst);
  const std::int64_t n1 = inst.n / inst.m;
  const std::int64_t k = inst.k;
  if (k == 0) return 1;  // single all-zero composition

  // n >= m*p*k + 1 gives n1 >= p*k_i + 1 for every part, so each factor is defined
  std::vector<BigInt> per_class(static_cast<std::size_t>(k) + 1);
  for (std::int64_t j = 0; j <= k; ++j)
    per_class[static_cast<std::size_t>(j)] = kaplansky_count(n1, inst.p, j);

  const std::size_t m = static_cast<std::size_t>(inst.m);
  std::vector<std::int64_t> parts(m, 0);
  parts[m - 1] = k;  // lexicographically first weak composition
  BigInt total = 0;
  while (true) {
    BigInt product = 1;
    for (std::int64_t v : parts)
      if (v > 0) product *= per_class[static_cast<std::size_t>(v)];
    total += product;

    // advance: bump the rightmost position with weight strictly to its right,
    // then push the freed weight to the last position
    std::size_t i = m - 1;
    std::int64_t tail = parts[m - 1];  // holds the suffix sum beyond index i
    bool advanced = false;
    while (i-- > 0) {
      if (tail > 0) {
        ++parts[i];
        --tail;
        for (std::size_t j = i + 1; j + 1 < m; ++j) parts[j] = 0;
        parts[m - 1] = tail;
        advanced = true;
        break;
      }
      tail += parts[i];
    }
    if (!advanced) break;
  }
  return total;
}

CountReport count_report(const SeparationInstance& inst, bool with_brute_force,
                         bool with_convolution, const Budget& budget) {
  CountReport report;
  report.instance = inst;
  report.closed_form = closed_form(inst);
  if (with_brute_force) report.brute_force = brute_force_count(inst, budget);
  if (with_convolution) report.convolution = convolution_count(inst);
  report.agree = (!report.brute_force || *report.brute_force == report.closed_form) &&
                 (!report.convolution || *report.convolution == report.closed_form);
  return report;
}

}  // namespace cycsep
