#include "cycsep/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "cycsep/bigint.hpp"

namespace cycsep {

bool SeparationInstance::satisfies_hypothesis() const {
  return BigInt(n) >= BigInt(m) * p * k + 1;
}

void SeparationInstance::validate() const {
  if (n < 1) throw std::domain_error("instance: n must be positive");
  if (m < 1) throw std::domain_error("instance: m must be positive");
  if (p < 1) throw std::domain_error("instance: p must be positive");
  if (k < 0) throw std::domain_error("instance: k must be nonnegative");
}

KSubset::KSubset(std::int64_t n, std::vector<std::int64_t> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 1) throw std::domain_error("KSubset: n must be positive");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0 || elements_[i] >= n_)
      throw std::domain_error("KSubset: residue out of [0, n)");
    if (i > 0 && elements_[i] == elements_[i - 1])
      throw std::domain_error("KSubset: duplicate residue");
  }
}

bool KSubset::contains(std::int64_t residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

KSubset KSubset::translated(std::int64_t c) const {
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  const std::int64_t shift = ((c % n_) + n_) % n_;
  for (std::int64_t x : elements_) out.push_back((x + shift) % n_);
  return KSubset(n_, std::move(out));
}

KSubset KSubset::reflected() const {
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  for (std::int64_t x : elements_) out.push_back((n_ - x) % n_);
  return KSubset(n_, std::move(out));
}

KSubset KSubset::scaled(std::int64_t a) const {
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  const BigInt mult = ((BigInt(a) % n_) + n_) % n_;
  for (std::int64_t x : elements_)
    out.push_back(static_cast<std::int64_t>(BigInt(mult * x % n_)));
  return KSubset(n_, std::move(out));
}

std::vector<std::int64_t> ResidueDecomposition::sizes() const {
  std::vector<std::int64_t> out;
  out.reserve(classes.size());
  for (const KSubset& y : classes) out.push_back(y.size());
  return out;
}

KSubset ResidueDecomposition::reassembled() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j : classes[static_cast<std::size_t>(i)].elements())
      out.push_back(i + m * j);
  return KSubset(m * n1, std::move(out));
}

std::vector<std::int64_t> forbidden_residues(const SeparationInstance& inst) {
  inst.validate();
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j <= inst.p; ++j) {
    const std::int64_t r = static_cast<std::int64_t>(BigInt(BigInt(j) * inst.m % inst.n));
    out.push_back(r);
    out.push_back((inst.n - r) % inst.n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool avoids_differences(const KSubset& X, const std::vector<std::int64_t>& forbidden) {
  const std::int64_t n = X.n();
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (std::int64_t r : forbidden) mask[static_cast<std::size_t>(r)] = true;
  const auto& e = X.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      // elements are sorted, so the difference is already in [1, n)
      if (mask[static_cast<std::size_t>(e[j] - e[i])]) return false;
    }
  return true;
}

bool is_admissible(const KSubset& X, const SeparationInstance& inst) {
  inst.validate();
  if (X.n() != inst.n) throw std::domain_error("is_admissible: modulus mismatch");
  if (X.size() != inst.k) throw std::domain_error("is_admissible: subset size != k");
  return avoids_differences(X, forbidden_residues(inst));
}

ResidueDecomposition decompose(const KSubset& X, std::int64_t m) {
  if (m < 1) throw std::domain_error("decompose: m must be positive");
  if (X.n() % m != 0) throw std::domain_error("decompose: m must divide n");
  const std::int64_t n1 = X.n() / m;
  std::vector<std::vector<std::int64_t>> lifted(static_cast<std::size_t>(m));
  for (std::int64_t x : X.elements())
    lifted[static_cast<std::size_t>(x % m)].push_back(x / m);
  ResidueDecomposition out{m, n1, {}};
  out.classes.reserve(static_cast<std::size_t>(m));
  for (auto& ys : lifted) out.classes.emplace_back(n1, std::move(ys));
  return out;
}

bool decomposition_equivalence(const KSubset& X, const SeparationInstance& inst) {
  inst.validate();
  if (inst.n % inst.m != 0)
    throw std::domain_error("decomposition_equivalence: m must divide n");
  const SeparationInstance whole{inst.n, inst.m, inst.p, X.size()};
  const bool lhs = is_admissible(X, whole);

  const ResidueDecomposition dec = decompose(X, inst.m);
  bool rhs = true;
  for (const KSubset& y : dec.classes) {
    const SeparationInstance cls{dec.n1, 1, inst.p, y.size()};
    if (!is_admissible(y, cls)) {
      rhs = false;
      break;
    }
  }
  return lhs == rhs;
}

}  // namespace cycsep
