#include "hurwitz/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

#include "hurwitz/detail/shell.hpp"

namespace hurwitz {

namespace {

using ClassSet = std::unordered_set<HurwitzInt, HurwitzIntHash>;

// An explicit five-coordinate representative of q's canonical class gives an
// upper bound for the shell search.
std::int64_t weight_upper_bound(const HurwitzInt& canonical) {
  std::int64_t s = 0;
  if (canonical.is_lipschitz()) {
    for (auto d : canonical.doubled()) s += std::llabs(d / 2);
    return s;
  }
  for (auto d : canonical.doubled()) s += std::llabs((d - 1) / 2);
  return s + 1;
}

HurwitzInt from_five(const std::array<std::int64_t, 5>& c) { return FiveCoordRep{c}.to_hurwitz(); }

// Canonicalizes every point of the box of radius `outer` (doubled coordinates
// with the given parity) and records which classes are hit from the inner box.
void scan_box(const HurwitzInt& pi, bool odd, std::int64_t inner, std::int64_t outer,
              ClassSet& inner_classes, ClassSet& all_classes) {
  const std::int64_t lim = odd ? 2 * outer + 1 : 2 * outer;
  const std::int64_t in_lim = odd ? 2 * inner + 1 : 2 * inner;
  const std::int64_t start = -lim;
  for (std::int64_t a = start; a <= lim; a += 2) {
    for (std::int64_t b = start; b <= lim; b += 2) {
      for (std::int64_t c = start; c <= lim; c += 2) {
        for (std::int64_t d = start; d <= lim; d += 2) {
          const auto q = HurwitzInt::from_doubled({a, b, c, d});
          const auto k = canonical_right_class(q, pi);
          all_classes.insert(k);
          if (std::llabs(a) <= in_lim && std::llabs(b) <= in_lim && std::llabs(c) <= in_lim &&
              std::llabs(d) <= in_lim) {
            inner_classes.insert(k);
          }
        }
      }
    }
  }
}

void require_nonzero(const HurwitzInt& pi) {
  if (pi.norm() == 0) throw std::invalid_argument("residue classes: zero modulus");
}

}  // namespace

std::int64_t hurwitz_weight(const HurwitzInt& q, const HurwitzInt& pi) {
  require_nonzero(pi);
  const auto target = canonical_right_class(q, pi);
  const auto bound = weight_upper_bound(target);
  for (std::int64_t w = 0; w <= bound; ++w) {
    const bool hit = detail::for_each_l1_shell<5>(w, [&](const auto& c) {
      return canonical_right_class(from_five(c), pi) == target;
    });
    if (hit) return w;
  }
  throw std::logic_error("hurwitz_weight: shell search passed its own upper bound");
}

std::int64_t lipschitz_weight(const HurwitzInt& q, const HurwitzInt& pi) {
  require_nonzero(pi);
  const auto target = canonical_right_class(q, pi);
  const bool odd = !target.is_lipschitz();
  std::int64_t bound = 0;
  for (auto d : target.doubled()) bound += std::llabs(d);
  // Search doubled coordinates by their L1 norm, which is twice the weight.
  for (std::int64_t s = 0; s <= bound; s += 2) {
    const bool hit = detail::for_each_l1_shell<4>(s, [&](const auto& d) {
      for (auto x : d) {
        if (((x & 1) != 0) != odd) return false;
      }
      return canonical_right_class(HurwitzInt::from_doubled(d), pi) == target;
    });
    if (hit) return s / 2;
  }
  throw std::logic_error("lipschitz_weight: shell search passed its own upper bound");
}

std::size_t enumerate_lipschitz_classes(const HurwitzInt& pi) {
  require_nonzero(pi);
  const auto radius = pi.norm();
  ClassSet inner, all;
  scan_box(pi, false, radius, radius + 2, inner, all);
  if (inner.size() != all.size()) {
    throw std::runtime_error("enumerate_lipschitz_classes: box of radius N(pi) is not stable");
  }
  return inner.size();
}

HurwitzResidueSystem HurwitzResidueSystem::enumerate(const HurwitzInt& pi) {
  require_nonzero(pi);
  const auto radius = pi.norm();
  ClassSet inner, all;
  scan_box(pi, false, radius, radius + 2, inner, all);
  scan_box(pi, true, radius, radius + 2, inner, all);
  if (inner.size() != all.size()) {
    throw std::runtime_error("enumerate_hurwitz_classes: box of radius N(pi) is not stable");
  }

  HurwitzResidueSystem sys;
  sys.pi_ = pi;
  sys.reps_.assign(inner.begin(), inner.end());
  std::sort(sys.reps_.begin(), sys.reps_.end());

  const auto shells = from_shells(pi);
  for (const auto& r : sys.reps_) {
    const auto it = shells.weights_.find(r);
    if (it == shells.weights_.end()) {
      throw std::logic_error("enumerate_hurwitz_classes: class missed by the shell search");
    }
    sys.weights_.emplace(r, it->second);
  }
  if (sys.weights_.size() != shells.weights_.size()) {
    throw std::logic_error("enumerate_hurwitz_classes: shell search found classes outside the box");
  }
  return sys;
}

HurwitzResidueSystem HurwitzResidueSystem::from_shells(const HurwitzInt& pi) {
  require_nonzero(pi);
  const auto n = pi.norm();
  // [H : H(Z)] = 2 and [H(Z) : H(Z) pi] = N(pi)^2.
  const auto target = static_cast<std::size_t>(2 * n * n);
  HurwitzResidueSystem sys;
  sys.pi_ = pi;
  // Every class has a representative with coordinates bounded by |pi|, so its
  // weight is far below this cap.
  const std::int64_t cap = 8 * n + 8;
  for (std::int64_t w = 0; sys.weights_.size() < target; ++w) {
    if (w > cap) throw std::logic_error("HurwitzResidueSystem: shell search did not terminate");
    detail::for_each_l1_shell<5>(w, [&](const auto& c) {
      sys.weights_.try_emplace(canonical_right_class(from_five(c), pi), w);
      return sys.weights_.size() == target;
    });
  }
  sys.reps_.reserve(sys.weights_.size());
  for (const auto& [rep, w] : sys.weights_) sys.reps_.push_back(rep);
  std::sort(sys.reps_.begin(), sys.reps_.end());
  return sys;
}

std::int64_t HurwitzResidueSystem::weight(const HurwitzInt& q) const {
  return weights_.at(canonical_right_class(q, pi_));
}

std::int64_t HurwitzResidueSystem::ideal_weight(const HurwitzInt& q) const {
  return std::min(weight(q), weight(q + HurwitzInt::w() * pi_));
}

std::int64_t HurwitzResidueSystem::max_weight() const {
  std::int64_t m = 0;
  for (const auto& [rep, w] : weights_) m = std::max(m, w);
  return m;
}

std::int64_t d_max(const ResidueField& field, DmaxScope scope, const HurwitzResidueSystem& system) {
  std::int64_t best = 0;
  for (const auto& e : field.elements()) {
    if (scope == DmaxScope::kResidueField) {
      best = std::max(best, field_weight(e, system));
      continue;
    }
    const auto q = e.to_hurwitz();
    for (auto u : kLipschitzUnits) {
      const auto mu = to_hurwitz(u);
      best = std::max({best, system.weight(mu * q), system.weight(q * mu)});
    }
  }
  return best;
}

std::int64_t d_max(const ResidueField& field, DmaxScope scope) {
  return d_max(field, scope, HurwitzResidueSystem::from_shells(field.modulus().quaternion()));
}

}  // namespace hurwitz
