#include "hurwitz/residue.hpp"

#include <algorithm>
#include <set>

namespace hurwitz {

using detail::checked_add;
using detail::checked_mul;
using detail::floor_div;

bool is_rational_prime(std::int64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::int64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

PrimeModulus PrimeModulus::create(EisensteinInt pi) {
  const auto p = pi.norm();
  if (!is_rational_prime(p)) {
    throw FieldError(FieldError::Kind::kNormNotPrime,
                     "modulus " + pi.to_string() + " has non-prime norm " + std::to_string(p));
  }
  if (p % 6 != 1) {
    throw FieldError(FieldError::Kind::kNormNotOneModSix,
                     "modulus norm " + std::to_string(p) + " is not 1 mod 6");
  }
  return PrimeModulus(pi, p);
}

EisensteinInt eis_reduce(const EisensteinInt& x, const EisensteinInt& pi) {
  const auto n = pi.norm();
  const auto t = x * pi.conjugate();
  // round(t / n) with ties toward +infinity: floor((2t + n) / 2n).
  const auto two_n = checked_mul(2, n);
  const EisensteinInt q{floor_div(checked_add(checked_mul(2, t.a), n), two_n),
                        floor_div(checked_add(checked_mul(2, t.b), n), two_n)};
  return x - q * pi;
}

bool congruent(const EisensteinInt& x, const EisensteinInt& y, const PrimeModulus& m) {
  const auto t = (x - y) * m.pi().conjugate();
  return t.a % m.p() == 0 && t.b % m.p() == 0;
}

HurwitzInt canonical_right_class(const HurwitzInt& q, const HurwitzInt& pi) {
  const auto n = pi.norm();
  if (n == 0) throw std::invalid_argument("canonical_right_class: zero modulus");
  const auto t = hamilton_product(q.doubled(), pi.conjugate().doubled());
  const auto four_n = checked_mul(4, n);
  const auto two_n = checked_mul(2, n);
  std::array<std::int64_t, 4> delta;
  for (std::size_t i = 0; i < 4; ++i) delta[i] = floor_div(checked_add(t[i], two_n), four_n);
  return q - HurwitzInt::from_integers(delta[0], delta[1], delta[2], delta[3]) * pi;
}

bool right_congruent(const HurwitzInt& q1, const HurwitzInt& q2, const HurwitzInt& pi) {
  return right_div_exact(q1 - q2, pi).has_value();
}

bool in_left_ideal(const HurwitzInt& q, const HurwitzInt& pi) {
  const auto n = pi.norm();
  if (n == 0) throw std::invalid_argument("in_left_ideal: zero modulus");
  // Doubled coordinates of q*conj(pi)/N are t/(2N); they must form a Hurwitz integer.
  const auto t = hamilton_product(q.doubled(), pi.conjugate().doubled());
  const auto two_n = checked_mul(2, n);
  std::int64_t parity = -1;
  for (auto x : t) {
    if (x % two_n != 0) return false;
    const auto par = (x / two_n) & 1;
    if (parity >= 0 && par != parity) return false;
    parity = par;
  }
  return true;
}

HurwitzInt canonical_ideal_class(const HurwitzInt& q, const HurwitzInt& pi) {
  const auto a = canonical_right_class(q, pi);
  const auto b = canonical_right_class(q + HurwitzInt::w() * pi, pi);
  return std::min(a, b);
}

ResidueField ResidueField::build(EisensteinInt pi, EisensteinInt beta) {
  ResidueField f(PrimeModulus::create(pi));
  const auto p = f.p();

  std::set<EisensteinInt> classes;
  for (std::int64_t k = 0; k < p; ++k) classes.insert(f.reduce({k, 0}));
  if (static_cast<std::int64_t>(classes.size()) != p) {
    throw std::logic_error("ResidueField: integers do not cover R/pi");
  }
  f.elements_.assign(classes.begin(), classes.end());

  f.beta_ = f.reduce(beta);
  const auto one = f.reduce({1, 0});
  auto x = one;
  f.antilog_.reserve(static_cast<std::size_t>(p - 1));
  for (std::int64_t k = 0; k < p - 1; ++k) {
    if (x.is_zero() || f.log_.contains(x)) {
      throw FieldError(FieldError::Kind::kBetaNotPrimitive,
                       "beta " + beta.to_string() + " is not a primitive element of R_pi");
    }
    f.log_.emplace(x, k);
    f.antilog_.push_back(x);
    x = f.mul(x, f.beta_);
  }

  const auto beta_n = f.antilog_[static_cast<std::size_t>(f.n())];
  if (beta_n == f.reduce({0, 1})) {
    f.beta_power_sign_ = 1;
  } else if (beta_n == f.reduce({0, -1})) {
    f.beta_power_sign_ = -1;
  } else {
    throw FieldError(FieldError::Kind::kBetaPowerNotW,
                     "beta^n = " + beta_n.to_string() + " is not congruent to +-w");
  }

  const auto piq = pi.to_hurwitz();
  for (const auto& e : f.elements_) {
    const auto [it, fresh] = f.by_ideal_class_.emplace(canonical_ideal_class(e.to_hurwitz(), piq), e);
    if (!fresh) throw std::logic_error("ResidueField: R_pi does not embed in H/H*pi");
  }
  return f;
}

EisensteinInt ResidueField::mul(const EisensteinInt& x, const EisensteinInt& y) const {
  return reduce(reduce(x) * reduce(y));
}

EisensteinInt ResidueField::beta_power(std::int64_t k) const {
  const auto order = p() - 1;
  auto idx = k % order;
  if (idx < 0) idx += order;
  return antilog_[static_cast<std::size_t>(idx)];
}

std::int64_t ResidueField::dlog(const EisensteinInt& x) const {
  const auto r = reduce(x);
  const auto it = log_.find(r);
  if (it == log_.end()) throw std::domain_error("dlog: zero has no logarithm");
  return it->second;
}

EisensteinInt ResidueField::inv(const EisensteinInt& x) const { return beta_power(-dlog(x)); }

EisensteinInt ResidueField::pow(const EisensteinInt& x, std::int64_t k) const {
  if (is_zero(x)) {
    if (k < 0) throw std::domain_error("pow: negative power of zero");
    return k == 0 ? reduce({1, 0}) : EisensteinInt{};
  }
  const auto order = p() - 1;
  return beta_power((dlog(x) % order) * (k % order));
}

std::optional<EisensteinInt> ResidueField::from_hurwitz(const HurwitzInt& q) const {
  const auto it = by_ideal_class_.find(canonical_ideal_class(q, modulus_.quaternion()));
  if (it == by_ideal_class_.end()) return std::nullopt;
  return it->second;
}

ResidueField ResidueField::with_corrupted_tables() const {
  ResidueField copy = *this;
  if (copy.antilog_.size() >= 3) std::swap(copy.antilog_[1], copy.antilog_[2]);
  return copy;
}

bool ResidueField::tables_consistent() const {
  if (static_cast<std::int64_t>(antilog_.size()) != p() - 1) return false;
  auto x = reduce({1, 0});
  for (std::size_t k = 0; k < antilog_.size(); ++k) {
    if (antilog_[k] != x) return false;
    const auto it = log_.find(x);
    if (it == log_.end() || it->second != static_cast<std::int64_t>(k)) return false;
    x = reduce(x * beta_);
  }
  return x == reduce({1, 0});
}

}  // namespace hurwitz
