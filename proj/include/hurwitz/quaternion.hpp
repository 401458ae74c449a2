// Exact arithmetic on the Hurwitz order of the Hamilton quaternions.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace hurwitz {

/// A Hurwitz integer held in doubled coordinates.
///
/// The represented quaternion is (d0 + d1*e1 + d2*e2 + d3*e3) / 2. The four
/// doubled coordinates are either all even (a Lipschitz integer) or all odd
/// (the half-integer coset); mixed parity is rejected at construction, so every
/// value of this type is a genuine element of the Hurwitz order.
///
/// Arithmetic is exact on 64-bit integers. Overflow is a hard error and raises
/// std::overflow_error.
class HurwitzInt {
 public:
  using Coords = std::array<std::int64_t, 4>;

  constexpr HurwitzInt() = default;

  /// Throws std::invalid_argument if the coordinates have mixed parity.
  static HurwitzInt from_doubled(const Coords& doubled);
  static HurwitzInt from_integers(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                                  std::int64_t a3);
  static HurwitzInt scalar(std::int64_t a) { return from_integers(a, 0, 0, 0); }

  static HurwitzInt one() { return scalar(1); }
  static HurwitzInt e1() { return from_integers(0, 1, 0, 0); }
  static HurwitzInt e2() { return from_integers(0, 0, 1, 0); }
  static HurwitzInt e3() { return from_integers(0, 0, 0, 1); }
  /// w = (1 + e1 + e2 + e3) / 2, a unit of order 6 with w^2 = w - 1.
  static HurwitzInt w() { return from_doubled({1, 1, 1, 1}); }

  const Coords& doubled() const { return d_; }
  std::int64_t doubled(std::size_t i) const { return d_[i]; }

  bool is_lipschitz() const { return (d_[0] & 1) == 0; }
  bool is_zero() const { return d_ == Coords{0, 0, 0, 0}; }

  /// N(q) = q q*, always a nonnegative integer.
  std::int64_t norm() const;
  HurwitzInt conjugate() const;

  HurwitzInt& operator+=(const HurwitzInt& o);
  HurwitzInt& operator-=(const HurwitzInt& o);

  friend HurwitzInt operator+(HurwitzInt a, const HurwitzInt& b) { return a += b; }
  friend HurwitzInt operator-(HurwitzInt a, const HurwitzInt& b) { return a -= b; }
  friend HurwitzInt operator-(const HurwitzInt& a);
  /// Noncommutative Hamilton product.
  friend HurwitzInt operator*(const HurwitzInt& a, const HurwitzInt& b);

  friend bool operator==(const HurwitzInt&, const HurwitzInt&) = default;
  /// Lexicographic on doubled coordinates. Used only for deterministic ordering.
  friend auto operator<=>(const HurwitzInt&, const HurwitzInt&) = default;

  /// Human-readable form such as "1+2e1+2e2+2e3" or "(-1+e1-e2-e3)/2".
  std::string to_string() const;

 private:
  explicit constexpr HurwitzInt(const Coords& d) : d_(d) {}

  Coords d_{0, 0, 0, 0};
};

struct HurwitzIntHash {
  std::size_t operator()(const HurwitzInt& q) const noexcept;
};

/// Integer Hamilton product of two coordinate 4-vectors, with overflow checks.
/// For doubled coordinates A = 2a, B = 2b this returns 4ab.
HurwitzInt::Coords hamilton_product(const HurwitzInt::Coords& a, const HurwitzInt::Coords& b);

/// The eight units of the Lipschitz order.
enum class LipschitzUnit : std::uint8_t {
  kPlusOne,
  kMinusOne,
  kPlusE1,
  kMinusE1,
  kPlusE2,
  kMinusE2,
  kPlusE3,
  kMinusE3,
};

inline constexpr std::array<LipschitzUnit, 8> kLipschitzUnits = {
    LipschitzUnit::kPlusOne, LipschitzUnit::kMinusOne, LipschitzUnit::kPlusE1,
    LipschitzUnit::kMinusE1, LipschitzUnit::kPlusE2,   LipschitzUnit::kMinusE2,
    LipschitzUnit::kPlusE3,  LipschitzUnit::kMinusE3,
};

HurwitzInt to_hurwitz(LipschitzUnit u);
LipschitzUnit unit_inverse(LipschitzUnit u);
LipschitzUnit unit_negate(LipschitzUnit u);
std::string to_string(LipschitzUnit u);
/// Index in kLipschitzUnits.
inline std::size_t unit_index(LipschitzUnit u) { return static_cast<std::size_t>(u); }

/// c0 + c1*e1 + c2*e2 + c3*e3 + c4*w, the coordinates the Hurwitz weight is
/// measured in. Every such vector is a Hurwitz integer.
struct FiveCoordRep {
  std::array<std::int64_t, 5> c{};

  HurwitzInt to_hurwitz() const;
  std::int64_t l1_norm() const;
};

/// Returns delta with q = delta * pi when delta = q * conj(pi) / N(pi) has all
/// integer coordinates (delta in the Lipschitz order), otherwise nothing.
/// Throws std::invalid_argument when pi is zero.
std::optional<HurwitzInt> right_div_exact(const HurwitzInt& q, const HurwitzInt& pi);

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace hurwitz
