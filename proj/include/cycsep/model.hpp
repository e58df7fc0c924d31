#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cycsep {

// Parameter tuple of one counting problem over Z_n: k-subsets whose pairwise
// differences avoid {m, 2m, ..., pm} (symmetrically mod n).
struct SeparationInstance {
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::int64_t p = 1;
  std::int64_t k = 1;

  // The closed-form count applies only when n >= m*p*k + 1. Instances below
  // the bound stay constructible for brute-force exploration.
  bool satisfies_hypothesis() const;

  void validate() const;  // throws std::domain_error on nonpositive n/m/p or k < 0

  friend bool operator==(const SeparationInstance&, const SeparationInstance&) = default;
};

// Canonical subset of Z_n: strictly increasing residues in [0, n).
class KSubset {
 public:
  KSubset() = default;
  // Sorts the elements; throws std::domain_error on duplicates or residues
  // outside [0, n).
  KSubset(std::int64_t n, std::vector<std::int64_t> elements);

  std::int64_t n() const { return n_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(std::int64_t residue) const;

  KSubset translated(std::int64_t c) const;  // {x + c mod n}
  KSubset reflected() const;                 // {-x mod n}
  KSubset scaled(std::int64_t a) const;      // {a*x mod n}; a need not be a unit

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset&, const KSubset&) = default;

 private:
  std::int64_t n_ = 1;
  std::vector<std::int64_t> elements_;
};

// The split of X ⊆ Z_n (n = m*n1) into the m classes {i + m*j : j in [0, n1)},
// each lifted to a subset of Z_{n1}.
struct ResidueDecomposition {
  std::int64_t m = 1;
  std::int64_t n1 = 1;
  std::vector<KSubset> classes;  // classes[i] lives in Z_{n1}

  std::vector<std::int64_t> sizes() const;
  KSubset reassembled() const;  // {i + m*j : j in classes[i]} ⊆ Z_{m*n1}
};

// Difference residues that disqualify a pair: {j*m mod n, -j*m mod n : 1<=j<=p},
// sorted ascending without duplicates.
std::vector<std::int64_t> forbidden_residues(const SeparationInstance& inst);

// True iff no pair of elements of X has difference residue in `forbidden`
// (assumed symmetric: r present iff n-r present).
bool avoids_differences(const KSubset& X, const std::vector<std::int64_t>& forbidden);

// Membership predicate of the counted family. Requires X.n == inst.n and
// |X| == inst.k; throws std::domain_error otherwise.
bool is_admissible(const KSubset& X, const SeparationInstance& inst);

// Splits X by residue class mod m. Requires m | X.n.
ResidueDecomposition decompose(const KSubset& X, std::int64_t m);

// Test oracle for the class-wise reformulation: X is admissible for
// (n, m, p, |X|) iff every lifted class Y_i is admissible for (n1, 1, p, |Y_i|).
// Must return true for every X when inst.m | inst.n.
bool decomposition_equivalence(const KSubset& X, const SeparationInstance& inst);

}  // namespace cycsep
