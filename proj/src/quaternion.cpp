#include "hurwitz/quaternion.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hurwitz {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hurwitz: integer overflow in add");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("hurwitz: integer overflow in sub");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("hurwitz: integer overflow in mul");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

HurwitzInt HurwitzInt::from_doubled(const Coords& d) {
  const auto parity = d[0] & 1;
  for (std::size_t i = 1; i < 4; ++i) {
    if ((d[i] & 1) != parity) {
      throw std::invalid_argument("HurwitzInt: doubled coordinates must share one parity");
    }
  }
  return HurwitzInt(d);
}

HurwitzInt HurwitzInt::from_integers(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                                     std::int64_t a3) {
  return HurwitzInt(
      {checked_mul(a0, 2), checked_mul(a1, 2), checked_mul(a2, 2), checked_mul(a3, 2)});
}

std::int64_t HurwitzInt::norm() const {
  std::int64_t s = 0;
  for (auto x : d_) s = checked_add(s, checked_mul(x, x));
  return s / 4;
}

HurwitzInt HurwitzInt::conjugate() const { return HurwitzInt({d_[0], -d_[1], -d_[2], -d_[3]}); }

HurwitzInt& HurwitzInt::operator+=(const HurwitzInt& o) {
  for (std::size_t i = 0; i < 4; ++i) d_[i] = checked_add(d_[i], o.d_[i]);
  return *this;
}

HurwitzInt& HurwitzInt::operator-=(const HurwitzInt& o) {
  for (std::size_t i = 0; i < 4; ++i) d_[i] = checked_sub(d_[i], o.d_[i]);
  return *this;
}

HurwitzInt operator-(const HurwitzInt& a) {
  return HurwitzInt({-a.d_[0], -a.d_[1], -a.d_[2], -a.d_[3]});
}

HurwitzInt::Coords hamilton_product(const HurwitzInt::Coords& a, const HurwitzInt::Coords& b) {
  auto m = [](std::int64_t x, std::int64_t y) { return checked_mul(x, y); };
  HurwitzInt::Coords r;
  r[0] = checked_sub(checked_sub(checked_sub(m(a[0], b[0]), m(a[1], b[1])), m(a[2], b[2])),
                     m(a[3], b[3]));
  r[1] = checked_sub(checked_add(checked_add(m(a[0], b[1]), m(a[1], b[0])), m(a[2], b[3])),
                     m(a[3], b[2]));
  r[2] = checked_add(checked_add(checked_sub(m(a[0], b[2]), m(a[1], b[3])), m(a[2], b[0])),
                     m(a[3], b[1]));
  r[3] = checked_add(checked_sub(checked_add(m(a[0], b[3]), m(a[1], b[2])), m(a[2], b[1])),
                     m(a[3], b[0]));
  return r;
}

HurwitzInt operator*(const HurwitzInt& a, const HurwitzInt& b) {
  // (A/2)(B/2) = (A*B)/4, so the doubled product is (A*B)/2.
  auto p = hamilton_product(a.d_, b.d_);
  for (auto& x : p) {
    if (x & 1) throw std::logic_error("HurwitzInt: product left the Hurwitz order");
    x /= 2;
  }
  return HurwitzInt::from_doubled(p);
}

namespace {

std::string format_linear(const HurwitzInt::Coords& c) {
  static const char* kBasis[4] = {"", "e1", "e2", "e3"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto v = c[i];
    if (v == 0) continue;
    if (v < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const auto mag = v < 0 ? -v : v;
    if (i == 0 || mag != 1) out += std::to_string(mag);
    out += kBasis[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string HurwitzInt::to_string() const {
  if (is_lipschitz()) return format_linear({d_[0] / 2, d_[1] / 2, d_[2] / 2, d_[3] / 2});
  return "(" + format_linear(d_) + ")/2";
}

std::size_t HurwitzIntHash::operator()(const HurwitzInt& q) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : q.doubled()) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

HurwitzInt to_hurwitz(LipschitzUnit u) {
  switch (u) {
    case LipschitzUnit::kPlusOne: return HurwitzInt::from_integers(1, 0, 0, 0);
    case LipschitzUnit::kMinusOne: return HurwitzInt::from_integers(-1, 0, 0, 0);
    case LipschitzUnit::kPlusE1: return HurwitzInt::from_integers(0, 1, 0, 0);
    case LipschitzUnit::kMinusE1: return HurwitzInt::from_integers(0, -1, 0, 0);
    case LipschitzUnit::kPlusE2: return HurwitzInt::from_integers(0, 0, 1, 0);
    case LipschitzUnit::kMinusE2: return HurwitzInt::from_integers(0, 0, -1, 0);
    case LipschitzUnit::kPlusE3: return HurwitzInt::from_integers(0, 0, 0, 1);
    case LipschitzUnit::kMinusE3: return HurwitzInt::from_integers(0, 0, 0, -1);
  }
  throw std::logic_error("unreachable LipschitzUnit");
}

LipschitzUnit unit_negate(LipschitzUnit u) {
  // Members come in (+x, -x) pairs at even/odd indices.
  return static_cast<LipschitzUnit>(static_cast<std::uint8_t>(u) ^ 1U);
}

LipschitzUnit unit_inverse(LipschitzUnit u) {
  // +-1 are self-inverse; the inverse of an imaginary unit is its negation.
  if (u == LipschitzUnit::kPlusOne || u == LipschitzUnit::kMinusOne) return u;
  return unit_negate(u);
}

std::string to_string(LipschitzUnit u) { return to_hurwitz(u).to_string(); }

HurwitzInt FiveCoordRep::to_hurwitz() const {
  HurwitzInt::Coords d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = checked_add(checked_mul(c[i], 2), c[4]);
  return HurwitzInt::from_doubled(d);
}

std::int64_t FiveCoordRep::l1_norm() const {
  std::int64_t s = 0;
  for (auto x : c) s = checked_add(s, std::llabs(x));
  return s;
}

std::optional<HurwitzInt> right_div_exact(const HurwitzInt& q, const HurwitzInt& pi) {
  const auto n = pi.norm();
  if (n == 0) throw std::invalid_argument("right_div_exact: zero modulus");
  // (2q)(2 conj pi) = 4 q conj(pi); delta = that / (4N) must be integral.
  const auto t = hamilton_product(q.doubled(), pi.conjugate().doubled());
  const auto denom = checked_mul(4, n);
  HurwitzInt::Coords delta;
  for (std::size_t i = 0; i < 4; ++i) {
    if (t[i] % denom != 0) return std::nullopt;
    delta[i] = t[i] / denom;
  }
  return HurwitzInt::from_integers(delta[0], delta[1], delta[2], delta[3]);
}

}  // namespace hurwitz
