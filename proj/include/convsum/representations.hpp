#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace convsum {

// Octonary form a(x1^2 + ... + x4^2) + b(x5^2 + ... + x8^2), kept with a <= b.
struct RepQuery {
  std::int64_t a;
  std::int64_t b;
  std::int64_t n;

  static RepQuery canonical(std::int64_t a, std::int64_t b, std::int64_t n);
};

inline constexpr std::int64_t kDefaultLatticeBound = 200;

// Jacobi: 8 sigma(n) - 32 sigma(n/4), with r4(0) = 1.
std::int64_t r4(std::int64_t n);

// Direct count of x in Z^4 with |x|^2 = n. Throws BoundExceeded for n > bound.
std::int64_t r4_lattice(std::int64_t n, std::int64_t bound = kDefaultLatticeBound);

// sum_{a l + b m = n, l, m >= 0} r4(l) r4(m).
std::int64_t N_ab_convolution(std::int64_t a, std::int64_t b, std::int64_t n);

// Direct 8-dimensional enumeration; only for n <= 10.
std::int64_t N_ab_lattice(std::int64_t a, std::int64_t b, std::int64_t n);

// The closed divisor-sum formulas for (a, b) in {(1,1), (1,3), (2,3), (1,9)},
// with every convolution sum taken from brute_force_W. Throws UnsupportedPair.
std::int64_t N_ab_formula(std::int64_t a, std::int64_t b, std::int64_t n);

// 16 sigma_3(n) - 32 sigma_3(n/2) + 256 sigma_3(n/4).
std::int64_t N11_closed_form(std::int64_t n);

// The (2,3) expression with W_(1,3) and W_(1,12) in place of W_(2,3) and
// W_(2,12). Kept to document where it departs from N_ab_convolution.
std::int64_t N23_with_W13(std::int64_t n);

std::vector<std::pair<std::int64_t, std::int64_t>> supported_formula_pairs();

}  // namespace convsum
