#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "convsum/bigrational.hpp"

namespace convsum {

// Sum of k-th powers of the positive divisors of n; 0 when n <= 0.
BigInt sigma(unsigned k, std::int64_t n);

// sigma(k, n / delta) when delta divides n, else 0.
BigInt sigma_at(unsigned k, std::int64_t n, std::int64_t delta);

// Positive divisors of n >= 1 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Precomputed sigma_k(n) for 1 <= n <= limit, for k in {0, 1, 2, 3}.
// Values fit in 64 bits for limit up to 10^6.
class SigmaTable {
 public:
  SigmaTable(unsigned k, std::int64_t limit);

  unsigned k() const { return k_; }
  std::int64_t limit() const { return static_cast<std::int64_t>(values_.size()) - 1; }

  // sigma_k(n); 0 for n <= 0. Throws std::out_of_range beyond limit.
  std::uint64_t operator()(std::int64_t n) const;
  // sigma_k(n / delta) with the non-integer convention.
  std::uint64_t at(std::int64_t n, std::int64_t delta) const;

 private:
  unsigned k_;
  std::vector<std::uint64_t> values_;
};

}  // namespace convsum
