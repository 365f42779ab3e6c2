#pragma once

#include <bit>
#include <cstdint>

namespace ufsr {

/// Product of distinct odd generators: bit i set iff theta_{i+1} is present.
/// Masks are sets, so theta_i^2 = 0 holds by construction.
using Mask = std::uint32_t;

constexpr int mask_parity(Mask m) noexcept { return std::popcount(m) & 1; }

/// Sign of theta_A * theta_B relative to theta_{A|B}: 0 when A and B share a
/// generator, otherwise (-1)^{#{(i, j) : i in A, j in B, i > j}}.
constexpr int koszul_sign(Mask a, Mask b) noexcept {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(static_cast<Mask>(a >> (j + 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Monomial order: by degree, then by mask value.
constexpr bool monomial_less(Mask a, Mask b) noexcept {
  const int da = std::popcount(a), db = std::popcount(b);
  return da != db ? da < db : a < b;
}

}  // namespace ufsr
