#include "cycsep/bijection.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "cycsep/numth.hpp"

namespace cycsep {

bool UnitMap::valid() const {
  if (n < 1 || source_m < 1) return false;
  const BigInt bn = n;
  if (gcd(BigInt(a), bn) != 1) return false;
  if ((BigInt(a) * a_inv - 1) % bn != 0) return false;
  if ((BigInt(a) * source_m - target_d) % bn != 0) return false;
  return target_d == gcd(BigInt(source_m), bn);
}

UnitMap build_unit_map(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::domain_error("build_unit_map: m and n must be positive");
  const UnitBezout cert = unit_bezout(m, n);
  UnitMap map;
  map.n = n;
  map.source_m = m;
  map.target_d = static_cast<std::int64_t>(cert.d);
  map.a = static_cast<std::int64_t>(cert.a);  // canonical a in (0, n]
  map.a_inv = static_cast<std::int64_t>(mod_inverse(cert.a, n));
  return map;
}

KSubset apply_map(const UnitMap& map, const KSubset& X) {
  if (X.n() != map.n) throw std::domain_error("apply_map: modulus mismatch");
  return X.scaled(map.a);
}

KSubset invert_map(const UnitMap& map, const KSubset& Y) {
  if (Y.n() != map.n) throw std::domain_error("invert_map: modulus mismatch");
  return Y.scaled(map.a_inv);
}

bool verify_bijection(const SeparationInstance& inst, const Budget& budget) {
  inst.validate();
  const std::int64_t d = static_cast<std::int64_t>(gcd(BigInt(inst.m), BigInt(inst.n)));
  const SeparationInstance source = inst;
  const SeparationInstance target{inst.n, d, inst.p, inst.k};
  const UnitMap map = build_unit_map(inst.m, inst.n);

  const std::vector<KSubset> family_m = enumerate_admissible(source, budget);
  const std::vector<KSubset> family_d = enumerate_admissible(target, budget);
  const std::set<KSubset> family_d_set(family_d.begin(), family_d.end());
  const std::set<KSubset> family_m_set(family_m.begin(), family_m.end());

  // forward: into the target family, injectively (set-size comparison
  // suffices on finite sets)
  std::set<KSubset> images;
  for (const KSubset& x : family_m) {
    const KSubset y = apply_map(map, x);
    if (!family_d_set.contains(y)) return false;
    images.insert(y);
  }
  if (images.size() != family_m.size()) return false;

  // backward: the inverse map lands in the source family
  for (const KSubset& y : family_d) {
    if (!family_m_set.contains(invert_map(map, y))) return false;
  }

  return family_m.size() == family_d.size();
}

}  // namespace cycsep
