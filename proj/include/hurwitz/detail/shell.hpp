#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>

namespace hurwitz::detail {

// Visits every integer vector of dimension Dim with L1 norm exactly `radius`.
// The callback returns true to stop early; the function then returns true.
template <std::size_t Dim, class Fn>
bool for_each_l1_shell(std::int64_t radius, Fn&& fn) {
  static_assert(Dim >= 1);
  std::array<std::int64_t, Dim> v{};
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> bool {
    if (i + 1 == Dim) {
      v[i] = remaining;
      if (fn(static_cast<const std::array<std::int64_t, Dim>&>(v))) return true;
      if (remaining != 0) {
        v[i] = -remaining;
        if (fn(static_cast<const std::array<std::int64_t, Dim>&>(v))) return true;
      }
      return false;
    }
    for (std::int64_t x = -remaining; x <= remaining; ++x) {
      v[i] = x;
      if (self(self, i + 1, remaining - std::llabs(x))) return true;
    }
    return false;
  };
  return rec(rec, 0, radius);
}

}  // namespace hurwitz::detail
