#include "convsum/representations.hpp"

#include <algorithm>
#include <string>

#include "convsum/arith.hpp"
#include "convsum/convolution.hpp"
#include "convsum/errors.hpp"

namespace convsum {

RepQuery RepQuery::canonical(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || b < 1) throw InvalidArgument("form coefficients must be positive");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  return RepQuery{std::min(a, b), std::max(a, b), n};
}

namespace {

std::int64_t s1(std::int64_t n, std::int64_t delta = 1) { return sigma_at(1, n, delta).get_si(); }

std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::int64_t r4(std::int64_t n) {
  if (n < 0) throw InvalidArgument("r4 of negative integer");
  if (n == 0) return 1;
  return 8 * s1(n) - 32 * s1(n, 4);
}

std::int64_t r4_lattice(std::int64_t n, std::int64_t bound) {
  if (n < 0) throw InvalidArgument("r4_lattice of negative integer");
  if (n > bound) {
    throw BoundExceeded("r4_lattice(" + std::to_string(n) + ") exceeds bound " + std::to_string(bound));
  }
  const std::int64_t r = isqrt(n);
  std::int64_t count = 0;
  for (std::int64_t x1 = -r; x1 <= r; ++x1) {
    const std::int64_t n1 = n - x1 * x1;
    for (std::int64_t x2 = -r; x2 <= r; ++x2) {
      const std::int64_t n2 = n1 - x2 * x2;
      if (n2 < 0) continue;
      for (std::int64_t x3 = -r; x3 <= r; ++x3) {
        const std::int64_t n3 = n2 - x3 * x3;
        if (n3 < 0) continue;
        const std::int64_t x4 = isqrt(n3);
        if (x4 * x4 == n3) count += (x4 == 0) ? 1 : 2;
      }
    }
  }
  return count;
}

std::int64_t N_ab_convolution(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || b < 1) throw InvalidArgument("form coefficients must be positive");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  std::int64_t total = 0;
  for (std::int64_t m = 0; b * m <= n; ++m) {
    const std::int64_t rest = n - b * m;
    if (rest % a != 0) continue;
    total += r4(rest / a) * r4(m);
  }
  return total;
}

std::int64_t N_ab_lattice(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || b < 1) throw InvalidArgument("form coefficients must be positive");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (n > 10) throw BoundExceeded("N_ab_lattice is limited to n <= 10");
  const std::int64_t r = isqrt(n);
  std::int64_t x[8];
  std::int64_t count = 0;
  // Nested enumeration with pruning on the partial value.
  auto recurse = [&](auto&& self, int depth, std::int64_t value) -> void {
    if (value > n) return;
    if (depth == 8) {
      if (value == n) ++count;
      return;
    }
    const std::int64_t weight = depth < 4 ? a : b;
    for (x[depth] = -r; x[depth] <= r; ++x[depth]) self(self, depth + 1, value + weight * x[depth] * x[depth]);
  };
  recurse(recurse, 0, 0);
  return count;
}

std::int64_t N11_closed_form(std::int64_t n) {
  if (n < 1) throw InvalidArgument("N11_closed_form requires n >= 1");
  return 16 * sigma_at(3, n, 1).get_si() - 32 * sigma_at(3, n, 2).get_si() + 256 * sigma_at(3, n, 4).get_si();
}

std::int64_t N_ab_formula(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n < 1) throw InvalidArgument("N_ab_formula requires n >= 1");
  const RepQuery q = RepQuery::canonical(a, b, n);
  const SigmaTable t(1, n);
  auto W = [&](std::int64_t alpha, std::int64_t beta, std::int64_t delta = 1) {
    return brute_force_W_at(alpha, beta, n, delta, t);
  };
  if (q.a == 1 && q.b == 1) {
    return 16 * s1(n) - 64 * s1(n, 4) + 64 * W(1, 1) + 1024 * W(1, 1, 4) - 512 * W(1, 4);
  }
  if (q.a == 1 && q.b == 3) {
    return 8 * s1(n) - 32 * s1(n, 4) + 8 * s1(n, 3) - 32 * s1(n, 12) + 64 * W(1, 3) + 1024 * W(1, 3, 4) -
           256 * (W(3, 4) + W(1, 12));
  }
  if (q.a == 2 && q.b == 3) {
    // l -> 4l turns W_(2,3) into W_(3,8), m -> 4m into W_(2,12), both into W_(2,3)(n/4).
    return 8 * s1(n, 2) - 32 * s1(n, 8) + 8 * s1(n, 3) - 32 * s1(n, 12) + 64 * W(2, 3) + 1024 * W(2, 3, 4) -
           256 * (W(3, 8) + W(2, 12));
  }
  if (q.a == 1 && q.b == 9) {
    return 8 * s1(n) - 32 * s1(n, 4) + 8 * s1(n, 9) - 32 * s1(n, 36) + 64 * W(1, 9) + 1024 * W(1, 9, 4) -
           256 * (W(4, 9) + W(1, 36));
  }
  throw UnsupportedPair("no formula for (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

std::int64_t N23_with_W13(std::int64_t n) {
  if (n < 1) throw InvalidArgument("N23_with_W13 requires n >= 1");
  const SigmaTable t(1, n);
  auto W = [&](std::int64_t alpha, std::int64_t beta, std::int64_t delta = 1) {
    return brute_force_W_at(alpha, beta, n, delta, t);
  };
  return 8 * s1(n, 2) - 32 * s1(n, 8) + 8 * s1(n, 3) - 32 * s1(n, 12) + 64 * W(1, 3) + 1024 * W(1, 3, 4) -
         256 * (W(3, 8) + W(1, 12));
}

std::vector<std::pair<std::int64_t, std::int64_t>> supported_formula_pairs() {
  return {{1, 1}, {1, 3}, {2, 3}, {1, 9}};
}

}  // namespace convsum
