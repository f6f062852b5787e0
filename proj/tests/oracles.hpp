#pragma once

// Test-only reference computations. Deliberately naive: plain rational
// loops, raw products, direct divisor scans. Nothing here calls the
// optimized library paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <random>
#include <vector>

#include "convsum/bigrational.hpp"

namespace oracle {

using convsum::BigInt;
using convsum::BigRational;
using Coeffs = std::vector<BigRational>;

inline std::int64_t sigma(unsigned k, std::int64_t n) {
  if (n <= 0) return 0;
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t p = 1;
    for (unsigned i = 0; i < k; ++i) p *= d;
    s += p;
  }
  return s;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  const std::size_t t = std::min(a.size(), b.size());
  Coeffs c(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; i + j < t; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// prod_{n=1}^{T} (1 - q^n), multiplied out factor by factor.
inline Coeffs euler_product(std::size_t truncation) {
  Coeffs c(truncation + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= truncation; ++n) {
    for (std::size_t i = truncation; i >= n; --i) {
      c[i] -= c[i - n];
      if (i == n) break;
    }
  }
  return c;
}

// 1 / prod (1 - q^n) = sum p(n) q^n via the factor-by-factor geometric series.
inline Coeffs inverse_euler_product(std::size_t truncation) {
  Coeffs c(truncation + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= truncation; ++n)
    for (std::size_t i = n; i <= truncation; ++i) c[i] += c[i - n];
  return c;
}

// prod_delta eta(delta z)^{r_delta} by raw multiplication; negative powers
// use the partition-style inverse. The leading q-power must be integral.
inline Coeffs eta_quotient(const std::vector<std::pair<int, int>>& exps, std::size_t truncation) {
  const Coeffs f = euler_product(truncation);
  const Coeffs finv = inverse_euler_product(truncation);
  Coeffs acc(truncation + 1);
  acc[0] = 1;
  std::int64_t weighted = 0;
  for (const auto& [delta, r] : exps) {
    weighted += static_cast<std::int64_t>(delta) * r;
    const Coeffs& base = r >= 0 ? f : finv;
    Coeffs sub(truncation + 1);
    for (std::size_t n = 0; n * delta <= truncation; ++n) sub[n * delta] = base[n];
    for (int i = 0; i < std::abs(r); ++i) acc = mul(acc, sub);
  }
  const auto e0 = static_cast<std::size_t>(weighted / 24);
  Coeffs out(truncation + 1);
  for (std::size_t n = e0; n <= truncation; ++n) out[n] = acc[n - e0];
  return out;
}

inline BigInt random_bits(std::mt19937_64& rng, int words) {
  BigInt v = 0;
  for (int i = 0; i < words; ++i) {
    v <<= 64;
    v += BigInt(std::to_string(rng()));
  }
  return v;
}

inline BigRational random_rational(std::mt19937_64& rng, int words) {
  BigInt num = random_bits(rng, words);
  if (rng() & 1U) num = -num;
  BigInt den = random_bits(rng, words) + 1;
  return BigRational(num, den);
}

inline BigRational small_rational(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(rng() % 41) - 20;
  const auto den = static_cast<std::int64_t>(rng() % 9) + 1;
  return BigRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

}  // namespace oracle
