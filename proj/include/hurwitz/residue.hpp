// Residue systems modulo a prime pi of Z[w]: the field R_pi, right congruence
// on the Hurwitz order, and the left-ideal congruence used for syndromes.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/eisenstein.hpp"
#include "hurwitz/quaternion.hpp"

namespace hurwitz {

class FieldError : public std::invalid_argument {
 public:
  enum class Kind {
    kNormNotPrime,
    kNormNotOneModSix,
    kBetaNotPrimitive,
    kBetaPowerNotW,
  };

  FieldError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A prime pi of Z[w] whose norm p is a rational prime with p = 1 (mod 6).
/// Code length is n = (p - 1) / 6.
class PrimeModulus {
 public:
  /// Throws FieldError (kNormNotPrime or kNormNotOneModSix).
  static PrimeModulus create(EisensteinInt pi);

  EisensteinInt pi() const { return pi_; }
  HurwitzInt quaternion() const { return pi_.to_hurwitz(); }
  std::int64_t p() const { return p_; }
  std::int64_t n() const { return n_; }

 private:
  PrimeModulus(EisensteinInt pi, std::int64_t p) : pi_(pi), p_(p), n_((p - 1) / 6) {}

  EisensteinInt pi_;
  std::int64_t p_;
  std::int64_t n_;
};

bool is_rational_prime(std::int64_t v);

/// Canonical representative of x modulo pi in Z[w]: Euclidean division with the
/// quotient coordinates rounded half toward +infinity.
EisensteinInt eis_reduce(const EisensteinInt& x, const EisensteinInt& pi);
inline EisensteinInt eis_reduce(const EisensteinInt& x, const PrimeModulus& m) {
  return eis_reduce(x, m.pi());
}

/// x = y (mod pi) in Z[w].
bool congruent(const EisensteinInt& x, const EisensteinInt& y, const PrimeModulus& m);

/// Canonical representative of the right-congruence class of q: q - delta*pi
/// with delta the coordinatewise rounding (half up) of q*conj(pi)/N(pi) in the
/// Lipschitz order. Any nonzero modulus is accepted.
HurwitzInt canonical_right_class(const HurwitzInt& q, const HurwitzInt& pi);

/// q1 = delta*pi + q2 with delta a Lipschitz integer.
bool right_congruent(const HurwitzInt& q1, const HurwitzInt& q2, const HurwitzInt& pi);
inline bool right_congruent(const HurwitzInt& q1, const HurwitzInt& q2, const PrimeModulus& m) {
  return right_congruent(q1, q2, m.quaternion());
}

/// Membership in the left ideal H*pi of the full Hurwitz order.
bool in_left_ideal(const HurwitzInt& q, const HurwitzInt& pi);

/// Canonical representative modulo the left ideal H*pi. The ideal is the union
/// of H(Z)*pi and H(Z)*pi + w*pi, so each ideal class is the union of two right
/// classes; the smaller canonical right representative is chosen.
HurwitzInt canonical_ideal_class(const HurwitzInt& q, const HurwitzInt& pi);

/// The finite field R_pi with a primitive element beta and full log tables.
class ResidueField {
 public:
  /// Validates the modulus, the primitivity of beta and beta^n = +-w.
  static ResidueField build(EisensteinInt pi, EisensteinInt beta);

  const PrimeModulus& modulus() const { return modulus_; }
  std::int64_t p() const { return modulus_.p(); }
  std::int64_t n() const { return modulus_.n(); }
  EisensteinInt beta() const { return beta_; }
  /// +1 when beta^n = w, -1 when beta^n = -w.
  int beta_power_sign() const { return beta_power_sign_; }

  /// Canonical representatives of all p residue classes, sorted.
  std::span<const EisensteinInt> elements() const { return elements_; }

  EisensteinInt reduce(const EisensteinInt& x) const { return eis_reduce(x, modulus_.pi()); }
  EisensteinInt from_int(std::int64_t v) const { return reduce({v, 0}); }
  EisensteinInt add(const EisensteinInt& x, const EisensteinInt& y) const { return reduce(x + y); }
  EisensteinInt sub(const EisensteinInt& x, const EisensteinInt& y) const { return reduce(x - y); }
  EisensteinInt neg(const EisensteinInt& x) const { return reduce(-x); }
  EisensteinInt mul(const EisensteinInt& x, const EisensteinInt& y) const;
  /// Throws std::domain_error on zero.
  EisensteinInt inv(const EisensteinInt& x) const;
  EisensteinInt div(const EisensteinInt& x, const EisensteinInt& y) const { return mul(x, inv(y)); }
  EisensteinInt pow(const EisensteinInt& x, std::int64_t k) const;
  bool is_zero(const EisensteinInt& x) const { return reduce(x).is_zero(); }

  /// beta^k for any integer k (taken modulo p - 1).
  EisensteinInt beta_power(std::int64_t k) const;
  /// L in [0, p-2] with beta^L = x. Throws std::domain_error for x = 0.
  std::int64_t dlog(const EisensteinInt& x) const;

  /// The field element whose class modulo the left ideal H*pi contains q, if
  /// any. This is how Hurwitz syndromes are read back as field elements.
  std::optional<EisensteinInt> from_hurwitz(const HurwitzInt& q) const;

  /// Copy with two antilog entries swapped, for negative-control tests of the
  /// table consistency checks.
  ResidueField with_corrupted_tables() const;

  /// Recomputes primitivity and log/antilog consistency; false on any mismatch.
  bool tables_consistent() const;

 private:
  explicit ResidueField(PrimeModulus m) : modulus_(m) {}

  PrimeModulus modulus_;
  EisensteinInt beta_;
  int beta_power_sign_ = 1;
  std::vector<EisensteinInt> elements_;
  std::vector<EisensteinInt> antilog_;
  std::unordered_map<EisensteinInt, std::int64_t, EisensteinIntHash> log_;
  std::unordered_map<HurwitzInt, EisensteinInt, HurwitzIntHash> by_ideal_class_;
};

}  // namespace hurwitz
