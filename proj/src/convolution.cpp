#include "convsum/convolution.hpp"

#include "convsum/errors.hpp"

namespace convsum {

std::int64_t brute_force_W(std::int64_t alpha, std::int64_t beta, std::int64_t n, const SigmaTable& sigma1) {
  if (alpha < 1 || beta < 1) throw InvalidArgument("brute_force_W requires alpha, beta >= 1");
  if (sigma1.k() != 1) throw InvalidArgument("brute_force_W needs a sigma_1 table");
  std::int64_t total = 0;
  for (std::int64_t m = 1; beta * m < n; ++m) {
    const std::int64_t rest = n - beta * m;
    if (rest % alpha != 0) continue;
    total += static_cast<std::int64_t>(sigma1(rest / alpha) * sigma1(m));
  }
  return total;
}

std::int64_t brute_force_W(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  if (n < 1) return 0;
  const SigmaTable table(1, n);
  return brute_force_W(alpha, beta, n, table);
}

std::int64_t brute_force_W_at(std::int64_t alpha, std::int64_t beta, std::int64_t n, std::int64_t delta,
                              const SigmaTable& sigma1) {
  if (n % delta != 0) return 0;
  return brute_force_W(alpha, beta, n / delta, sigma1);
}

QSeries target_series(std::int64_t alpha, std::int64_t beta, std::size_t truncation) {
  if (alpha < 1 || beta < 1) throw InvalidArgument("target_series requires alpha, beta >= 1");
  if (gcd(alpha, beta) != 1) throw InvalidArgument("target_series requires gcd(alpha, beta) = 1");
  const QSeries l = eisenstein_L(truncation);
  const QSeries diff = sub(scale(substitute(l, static_cast<std::size_t>(alpha), truncation), alpha),
                           scale(substitute(l, static_cast<std::size_t>(beta), truncation), beta));
  return mul(diff, diff);
}

BigInt extraction_identity_rhs(std::int64_t alpha, std::int64_t beta, std::int64_t n, std::int64_t w) {
  const BigInt a = static_cast<long>(alpha);
  const BigInt b = static_cast<long>(beta);
  const BigInt nn = static_cast<long>(n);
  BigInt v = 240 * a * a * sigma_at(3, n, alpha) + 240 * b * b * sigma_at(3, n, beta) +
             48 * a * (b - 6 * nn) * sigma_at(1, n, alpha) + 48 * b * (a - 6 * nn) * sigma_at(1, n, beta) -
             1152 * a * b * BigInt(static_cast<long>(w));
  return v;
}

namespace {

void check_pair(std::int64_t alpha, std::int64_t beta, const Basis& basis) {
  if (alpha < 1 || beta < 1) throw InvalidArgument("alpha and beta must be positive");
  if (gcd(alpha, beta) != 1) {
    throw InvalidArgument("derivation requires gcd(alpha, beta) = 1, got (" + std::to_string(alpha) + ", " +
                          std::to_string(beta) + ")");
  }
  if (alpha >= beta) throw InvalidArgument("derivation requires alpha < beta");
  if (basis.level != alpha * beta) {
    throw InvalidArgument("basis level " + std::to_string(basis.level) + " does not equal alpha * beta");
  }
}

}  // namespace

TargetExpansion expand_target(std::int64_t alpha, std::int64_t beta, const Basis& basis) {
  check_pair(alpha, beta, basis);
  const QSeries target = target_series(alpha, beta, basis.truncation);
  const std::vector<BigRational> x = express_in_basis(target, basis);

  TargetExpansion out{alpha, beta, target[0], {}, {}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisElement& e = basis.elements[i];
    if (e.kind == BasisElement::Kind::Eisenstein) {
      out.eisenstein.emplace(e.t, x[i]);
    } else {
      out.cusp.emplace_back(e.label, x[i]);
    }
  }
  return out;
}

ConvolutionFormula derive_convolution_formula(std::int64_t alpha, std::int64_t beta, const Basis& basis) {
  const TargetExpansion expansion = expand_target(alpha, beta, basis);
  const BigRational denom = BigRational(1152 * alpha * beta);

  ConvolutionFormula f;
  f.alpha = alpha;
  f.beta = beta;
  f.level = basis.level;
  // W(n) = [240 a^2 s3(n/a) + 240 b^2 s3(n/b) + 48 a (b - 6n) s(n/a)
  //         + 48 b (a - 6n) s(n/b) - (basis expansion at q^n)] / (1152 a b)
  for (const auto& [t, x] : expansion.eisenstein) {
    BigRational c = -x * 240;
    if (t == alpha) c += BigRational(240 * alpha * alpha);
    if (t == beta) c += BigRational(240 * beta * beta);
    f.sigma3_terms.emplace(t, c / denom);
  }
  f.sigma_terms.emplace(static_cast<int>(alpha),
                        std::make_pair(BigRational(48 * alpha * beta) / denom, BigRational(-288 * alpha) / denom));
  f.sigma_terms.emplace(static_cast<int>(beta),
                        std::make_pair(BigRational(48 * alpha * beta) / denom, BigRational(-288 * beta) / denom));
  for (const auto& [label, y] : expansion.cusp) f.cusp_terms.emplace_back(label, -y / denom);
  return f;
}

BigRational evaluate_formula(const ConvolutionFormula& f, std::int64_t n, std::span<const QSeries> cusp_series) {
  if (n < 1) throw InvalidArgument("evaluate_formula requires n >= 1");
  if (cusp_series.size() != f.cusp_terms.size()) {
    throw InvalidArgument("evaluate_formula: " + std::to_string(f.cusp_terms.size()) + " cusp terms but " +
                          std::to_string(cusp_series.size()) + " series");
  }
  for (const QSeries& s : cusp_series) {
    if (static_cast<std::int64_t>(s.truncation()) < n) {
      throw TruncationExceeded("n = " + std::to_string(n) + " beyond cusp series truncation " +
                               std::to_string(s.truncation()));
    }
  }
  BigRational value;
  for (const auto& [delta, c] : f.sigma3_terms) {
    if (n % delta == 0) value += c * BigRational(sigma(3, n / delta));
  }
  for (const auto& [delta, c] : f.sigma_terms) {
    if (n % delta == 0) value += (c.first + c.second * n) * BigRational(sigma(1, n / delta));
  }
  for (std::size_t i = 0; i < cusp_series.size(); ++i) {
    const BigRational& a = cusp_series[i][static_cast<std::size_t>(n)];
    if (!a.is_zero()) value += f.cusp_terms[i].second * a;
  }
  return value;
}

VerificationReport verify_formula(const ConvolutionFormula& f, std::int64_t n_max,
                                  std::span<const QSeries> cusp_series) {
  if (n_max < 1) throw InvalidArgument("verify_formula requires n_max >= 1");
  const SigmaTable sigma1(1, n_max);
  VerificationReport report;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const BigRational value = evaluate_formula(f, n, cusp_series);
    const std::int64_t w = brute_force_W(f.alpha, f.beta, n, sigma1);
    if (!value.is_integer() || value != BigRational(w)) report.mismatches.push_back(Mismatch{n, value, w});
    ++report.checked;
  }
  return report;
}

}  // namespace convsum
