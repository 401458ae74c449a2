// The commutative subring R = Z[w] of the Hurwitz order, w = (1+e1+e2+e3)/2.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "hurwitz/quaternion.hpp"

namespace hurwitz {

/// a + b*w with w^2 = w - 1. Isomorphic to the Eisenstein integers.
struct EisensteinInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  /// a^2 + ab + b^2, equal to the quaternion norm of the embedding.
  std::int64_t norm() const;
  /// Quaternion conjugate; conj(w) = 1 - w.
  EisensteinInt conjugate() const;
  bool is_zero() const { return a == 0 && b == 0; }

  /// Doubled coordinates (2a+b, b, b, b).
  HurwitzInt to_hurwitz() const;
  /// The preimage of q when q lies in Z[w] (three equal imaginary parts).
  static std::optional<EisensteinInt> from_hurwitz(const HurwitzInt& q);

  std::string to_string() const;

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
  friend EisensteinInt operator-(const EisensteinInt& x);
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
  friend auto operator<=>(const EisensteinInt&, const EisensteinInt&) = default;
};

struct EisensteinIntHash {
  std::size_t operator()(const EisensteinInt& x) const noexcept;
};

}  // namespace hurwitz
