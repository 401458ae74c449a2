// Shared fixtures for the unit tests.

#pragma once

#include <memory>
#include <ostream>
#include <random>
#include <vector>

#include "hurwitz/code.hpp"
#include "hurwitz/residue.hpp"

namespace hurwitz {

// gtest's byte-dump fallback does not handle these types well.
inline void PrintTo(const HurwitzInt& q, std::ostream* os) { *os << q.to_string(); }
inline void PrintTo(const EisensteinInt& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace hurwitz

namespace hurwitz::testing {

// pi = 1+2e1+2e2+2e3 = -1+4w, beta = e1+e2+e3 = -1+2w.
inline std::shared_ptr<const ResidueField> field13() {
  static const auto f = std::make_shared<const ResidueField>(ResidueField::build({-1, 4}, {-1, 2}));
  return f;
}

// pi = 2+3e1+3e2+3e3 = -1+6w, beta = -(5+e1+e2+e3)/2 = -2-w.
inline std::shared_ptr<const ResidueField> field31() {
  static const auto f = std::make_shared<const ResidueField>(ResidueField::build({-1, 6}, {-2, -1}));
  return f;
}

inline CodeSpec code_of(std::shared_ptr<const ResidueField> f, std::vector<int> rows,
                        ErrorModel model = ErrorModel::kResidueField) {
  return build_code(std::move(f), std::move(rows), model);
}

inline HurwitzInt b(const ResidueField& f, std::int64_t k) { return f.beta_power(k).to_hurwitz(); }

inline HurwitzInt random_hurwitz(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  const bool odd = rng() & 1;
  HurwitzInt::Coords c;
  for (auto& x : c) x = 2 * d(rng) + (odd ? 1 : 0);
  return HurwitzInt::from_doubled(c);
}

}  // namespace hurwitz::testing
