#pragma once

// The piecewise Hilbert function of double-sign points for k = 2, written
// out branch by branch; nullopt in the window the branches leave open.

#include <powideal/numerics.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace piecewise {

inline std::optional<powideal::BigInt> fat_hf_k2(long n, long d, long m) {
  using powideal::BigInt;
  using powideal::binomial;
  const BigInt c = binomial(d + n - 1, n - 1);
  std::optional<BigInt> out;
  auto set = [&](const BigInt& v) {
    if (out && *out != v)
      throw std::logic_error("overlapping branches disagree at n=" + std::to_string(n) + " d=" + std::to_string(d) +
                             " m=" + std::to_string(m));
    out = v;
  };
  if (m <= 2 * d - 1) set(binomial(n + m, n));
  if (m == 2 * d) set(binomial(n + 2 * d, n) - c);
  if (m == 2 * d + 1) set(binomial(n + 2 * d + 1, n) - BigInt(n + 1) * c);
  if (m >= 2 * d + n - 2) set(powideal::ipow(BigInt(2), n) * binomial(n + d - 1, n));
  return out;
}

}  // namespace piecewise
