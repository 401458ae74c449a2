#include "hurwitz/eisenstein.hpp"

#include <functional>

namespace hurwitz {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::int64_t EisensteinInt::norm() const {
  return checked_add(checked_add(checked_mul(a, a), checked_mul(a, b)), checked_mul(b, b));
}

EisensteinInt EisensteinInt::conjugate() const { return {checked_add(a, b), -b}; }

HurwitzInt EisensteinInt::to_hurwitz() const {
  return HurwitzInt::from_doubled({checked_add(checked_mul(2, a), b), b, b, b});
}

std::optional<EisensteinInt> EisensteinInt::from_hurwitz(const HurwitzInt& q) {
  const auto& d = q.doubled();
  if (d[1] != d[2] || d[2] != d[3]) return std::nullopt;
  // d0 = 2a + b and b share parity by the HurwitzInt invariant.
  return EisensteinInt{(d[0] - d[1]) / 2, d[1]};
}

std::string EisensteinInt::to_string() const {
  if (b == 0) return std::to_string(a);
  std::string out = a != 0 ? std::to_string(a) : "";
  if (b < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const auto mag = b < 0 ? -b : b;
  if (mag != 1) out += std::to_string(mag);
  return out + "w";
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a + bw)(c + dw) = ac - bd + (ad + bc + bd)w, using w^2 = w - 1.
  const auto bd = checked_mul(x.b, y.b);
  return {checked_sub(checked_mul(x.a, y.a), bd),
          checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bd)};
}

std::size_t EisensteinIntHash::operator()(const EisensteinInt& x) const noexcept {
  return std::hash<std::int64_t>{}(x.a) * 0x9e3779b97f4a7c15ULL ^ std::hash<std::int64_t>{}(x.b);
}

}  // namespace hurwitz
