// Hurwitz and Lipschitz weights, residue class enumeration, and d_max.

#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hurwitz/quaternion.hpp"
#include "hurwitz/residue.hpp"

namespace hurwitz {

/// Minimal |c0|+|c1|+|c2|+|c3|+|c4| over all c0+c1e1+c2e2+c3e3+c4w right
/// congruent to q modulo pi. Iterative deepening over exact L1 shells.
std::int64_t hurwitz_weight(const HurwitzInt& q, const HurwitzInt& pi);
inline std::int64_t hurwitz_weight(const HurwitzInt& q, const PrimeModulus& m) {
  return hurwitz_weight(q, m.quaternion());
}

/// Minimal |a0|+|a1|+|a2|+|a3| over the right-congruence class of q, measured
/// on the four real coordinates. A half-integer class has only half-integer
/// members, so for those the coordinates are halves (w has weight 2).
std::int64_t lipschitz_weight(const HurwitzInt& q, const HurwitzInt& pi);
inline std::int64_t lipschitz_weight(const HurwitzInt& q, const PrimeModulus& m) {
  return lipschitz_weight(q, m.quaternion());
}

inline std::int64_t hurwitz_distance(const HurwitzInt& a, const HurwitzInt& b,
                                     const HurwitzInt& pi) {
  return hurwitz_weight(a - b, pi);
}

/// Counts right-congruence classes of the Lipschitz order modulo pi by
/// canonicalizing every Lipschitz integer with coordinates in [-N, N] and
/// checking the count does not change on the box of radius N + 2.
/// Throws std::runtime_error if the box is not stable.
std::size_t enumerate_lipschitz_classes(const HurwitzInt& pi);

/// Every right-congruence class of the Hurwitz order modulo pi, with its weight.
class HurwitzResidueSystem {
 public:
  /// Box enumeration over both coordinate parities (same scheme as
  /// enumerate_lipschitz_classes), then weights from L1 shells.
  static HurwitzResidueSystem enumerate(const HurwitzInt& pi);
  /// Weights from L1 shells only, stopping once all 2*N(pi)^2 cosets of
  /// H(Z)*pi in the Hurwitz order are reached. Much cheaper than enumerate().
  static HurwitzResidueSystem from_shells(const HurwitzInt& pi);

  const HurwitzInt& modulus() const { return pi_; }
  /// Canonical representatives, sorted.
  std::span<const HurwitzInt> representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

  std::int64_t weight(const HurwitzInt& q) const;
  std::int64_t distance(const HurwitzInt& a, const HurwitzInt& b) const { return weight(a - b); }
  /// Weight modulo the left ideal H*pi: the lighter of the two right classes
  /// it contains. This is the weight of a field element of R_pi.
  std::int64_t ideal_weight(const HurwitzInt& q) const;
  std::int64_t max_weight() const;

 private:
  HurwitzInt pi_;
  std::vector<HurwitzInt> reps_;
  std::unordered_map<HurwitzInt, std::int64_t, HurwitzIntHash> weights_;
};

inline HurwitzResidueSystem enumerate_hurwitz_classes(const HurwitzInt& pi) {
  return HurwitzResidueSystem::enumerate(pi);
}

enum class DmaxScope {
  kResidueField,      // max w_H over R_pi
  kAssociateClosure,  // max w_H over mu*q and q*mu, q in R_pi, mu a Lipschitz unit
};

std::int64_t d_max(const ResidueField& field, DmaxScope scope, const HurwitzResidueSystem& system);
std::int64_t d_max(const ResidueField& field, DmaxScope scope);

/// Weight of a field element of R_pi (see HurwitzResidueSystem::ideal_weight).
inline std::int64_t field_weight(const EisensteinInt& x, const HurwitzResidueSystem& system) {
  return system.ideal_weight(x.to_hurwitz());
}

}  // namespace hurwitz
