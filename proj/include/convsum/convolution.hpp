#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convsum/arith.hpp"
#include "convsum/bigrational.hpp"
#include "convsum/modforms.hpp"
#include "convsum/qseries.hpp"

namespace convsum {

// W_(alpha,beta)(n) = sum sigma(l) sigma(m) over l, m >= 1 with alpha l + beta m = n.
std::int64_t brute_force_W(std::int64_t alpha, std::int64_t beta, std::int64_t n);
// Same, reading sigma from a table that must cover n.
std::int64_t brute_force_W(std::int64_t alpha, std::int64_t beta, std::int64_t n, const SigmaTable& sigma1);

// W_(alpha,beta)(n / delta), zero when delta does not divide n.
std::int64_t brute_force_W_at(std::int64_t alpha, std::int64_t beta, std::int64_t n, std::int64_t delta,
                              const SigmaTable& sigma1);

// (alpha L(q^alpha) - beta L(q^beta))^2
QSeries target_series(std::int64_t alpha, std::int64_t beta, std::size_t truncation);

// The q^n coefficient predicted by the W-extraction identity:
// 240 a^2 s3(n/a) + 240 b^2 s3(n/b) + 48 a (b - 6n) s(n/a) + 48 b (a - 6n) s(n/b) - 1152 a b W(n).
BigInt extraction_identity_rhs(std::int64_t alpha, std::int64_t beta, std::int64_t n, std::int64_t w);

// Basis coefficients of target_series(alpha, beta) split by block.
struct TargetExpansion {
  std::int64_t alpha;
  std::int64_t beta;
  BigRational constant;                                        // (alpha - beta)^2
  std::map<int, BigRational> eisenstein;                       // t -> x_t on M(q^t)
  std::vector<std::pair<std::string, BigRational>> cusp;       // label -> y_j

  // Coefficient of sigma_3(n/t) in the expansion, i.e. 240 x_t.
  BigRational sigma3_display(int t) const { return eisenstein.at(t) * 240; }
};

TargetExpansion expand_target(std::int64_t alpha, std::int64_t beta, const Basis& basis);

struct ConvolutionFormula {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  int level = 0;
  std::map<int, BigRational> sigma3_terms;                           // delta -> coeff on sigma_3(n/delta)
  std::map<int, std::pair<BigRational, BigRational>> sigma_terms;    // delta -> (c0, c1): (c0 + c1 n) sigma(n/delta)
  std::vector<std::pair<std::string, BigRational>> cusp_terms;       // cusp label -> coeff on its q^n coefficient
};

// Requires gcd(alpha, beta) = 1, alpha < beta and basis.level == alpha * beta.
ConvolutionFormula derive_convolution_formula(std::int64_t alpha, std::int64_t beta, const Basis& basis);

// Formula value at n; cusp_series aligned with f.cusp_terms. Throws
// TruncationExceeded when n is beyond a cusp series.
BigRational evaluate_formula(const ConvolutionFormula& f, std::int64_t n, std::span<const QSeries> cusp_series);

struct Mismatch {
  std::int64_t n;
  BigRational formula;
  std::int64_t brute_force;
};

struct VerificationReport {
  std::int64_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Compares evaluate_formula with brute_force_W for 1 <= n <= n_max.
VerificationReport verify_formula(const ConvolutionFormula& f, std::int64_t n_max,
                                  std::span<const QSeries> cusp_series);

}  // namespace convsum
