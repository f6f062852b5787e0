#include "convsum/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "convsum/errors.hpp"

namespace convsum {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw InvalidArgument("divisors of non-positive integer " + std::to_string(n));
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InvalidArgument("factorize of non-positive integer " + std::to_string(n));
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

BigInt sigma(unsigned k, std::int64_t n) {
  BigInt total = 0;
  if (n <= 0) return total;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += term;
    const std::int64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
      total += term;
    }
  }
  return total;
}

BigInt sigma_at(unsigned k, std::int64_t n, std::int64_t delta) {
  if (delta < 1) throw InvalidArgument("sigma_at requires delta >= 1");
  if (n % delta != 0) return 0;
  return sigma(k, n / delta);
}

SigmaTable::SigmaTable(unsigned k, std::int64_t limit) : k_(k) {
  if (k > 3) throw InvalidArgument("SigmaTable supports k <= 3");
  if (limit < 0 || limit > 1'000'000) throw InvalidArgument("SigmaTable limit out of range");
  values_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t d = 1; d <= limit; ++d) {
    std::uint64_t p = 1;
    for (unsigned i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(d);
    for (std::int64_t m = d; m <= limit; m += d) values_[static_cast<std::size_t>(m)] += p;
  }
}

std::uint64_t SigmaTable::operator()(std::int64_t n) const {
  if (n <= 0) return 0;
  if (n > limit()) {
    throw std::out_of_range("SigmaTable index " + std::to_string(n) + " beyond limit " +
                            std::to_string(limit()));
  }
  return values_[static_cast<std::size_t>(n)];
}

std::uint64_t SigmaTable::at(std::int64_t n, std::int64_t delta) const {
  if (n % delta != 0) return 0;
  return (*this)(n / delta);
}

}  // namespace convsum
