#include "convsum/qseries.hpp"

#include <algorithm>
#include <string>

#include "convsum/errors.hpp"

namespace convsum {

QSeries::QSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

QSeries::QSeries(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InvalidArgument("QSeries needs at least one coefficient");
}

QSeries QSeries::one(std::size_t truncation) {
  QSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::from_integers(std::span<const std::int64_t> coefficients) {
  std::vector<BigRational> c(coefficients.begin(), coefficients.end());
  return QSeries(std::move(c));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.is_zero(); });
}

std::size_t QSeries::order() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!coeffs_[n].is_zero()) return n;
  }
  return coeffs_.size();
}

namespace {

// a = numerators / denominator with integer numerators, restricted to [0, T].
struct ScaledIntegers {
  std::vector<BigInt> numerators;
  BigInt denominator;
  std::vector<std::size_t> support;  // indices of nonzero numerators
};

ScaledIntegers scaled_integers(const QSeries& a, std::size_t truncation) {
  ScaledIntegers out;
  out.denominator = 1;
  for (std::size_t n = 0; n <= truncation; ++n) {
    const mpq_class& c = a[n].raw();
    if (c.get_den() != 1) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  out.numerators.resize(truncation + 1);
  for (std::size_t n = 0; n <= truncation; ++n) {
    const mpq_class& c = a[n].raw();
    if (sgn(c) == 0) continue;
    if (out.denominator == 1) {
      out.numerators[n] = c.get_num();
    } else {
      BigInt factor = out.denominator / c.get_den();
      out.numerators[n] = c.get_num() * factor;
    }
    out.support.push_back(n);
  }
  return out;
}

std::vector<BigRational> divide_all(std::vector<BigInt>& numerators, const BigInt& denominator) {
  std::vector<BigRational> out;
  out.reserve(numerators.size());
  for (auto& v : numerators) {
    if (denominator == 1) {
      out.emplace_back(v);
    } else {
      out.emplace_back(v, denominator);
    }
  }
  return out;
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  std::vector<BigRational> c(t + 1);
  for (std::size_t n = 0; n <= t; ++n) c[n] = a[n] + b[n];
  return QSeries(std::move(c));
}

QSeries sub(const QSeries& a, const QSeries& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  std::vector<BigRational> c(t + 1);
  for (std::size_t n = 0; n <= t; ++n) c[n] = a[n] - b[n];
  return QSeries(std::move(c));
}

QSeries negate(const QSeries& a) {
  std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return QSeries(std::move(c));
}

QSeries scale(const QSeries& a, const BigRational& factor) {
  std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= factor;
  return QSeries(std::move(c));
}

// Cauchy product on a common-denominator integer representation, so the
// inner loop is mpz multiply-accumulate instead of rational arithmetic.
QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  const ScaledIntegers ia = scaled_integers(a, t);
  const ScaledIntegers ib = scaled_integers(b, t);
  std::vector<BigInt> acc(t + 1);
  for (std::size_t i : ia.support) {
    const mpz_srcptr x = ia.numerators[i].get_mpz_t();
    for (std::size_t j : ib.support) {
      if (i + j > t) break;
      mpz_addmul(acc[i + j].get_mpz_t(), x, ib.numerators[j].get_mpz_t());
    }
  }
  return QSeries(divide_all(acc, ia.denominator * ib.denominator));
}

QSeries reciprocal(const QSeries& a) {
  if (a[0].is_zero()) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
  const std::size_t t = a.truncation();
  const ScaledIntegers ia = scaled_integers(a, t);
  const BigInt& lead = ia.numerators[0];

  // a = A / D, so 1/a = D * (1/A). With A_0 = +-1 the recurrence
  // r_n = -A_0 * sum_{k>=1} A_k r_{n-k} stays integral.
  if (lead == 1 || lead == -1) {
    std::vector<BigInt> r(t + 1);
    r[0] = lead;
    BigInt acc;
    for (std::size_t n = 1; n <= t; ++n) {
      acc = 0;
      for (std::size_t k : ia.support) {
        if (k == 0) continue;
        if (k > n) break;
        mpz_addmul(acc.get_mpz_t(), ia.numerators[k].get_mpz_t(), r[n - k].get_mpz_t());
      }
      r[n] = (lead == 1) ? BigInt(-acc) : acc;
    }
    for (auto& v : r) v *= ia.denominator;
    return QSeries(divide_all(r, BigInt(1)));
  }

  std::vector<BigRational> r(t + 1);
  const BigRational inv_lead = BigRational(1) / a[0];
  r[0] = inv_lead;
  for (std::size_t n = 1; n <= t; ++n) {
    BigRational acc;
    for (std::size_t k : ia.support) {
      if (k == 0) continue;
      if (k > n) break;
      acc += a[k] * r[n - k];
    }
    r[n] = -(acc * inv_lead);
  }
  return QSeries(std::move(r));
}

QSeries pow(const QSeries& a, std::int64_t e) {
  const std::size_t t = a.truncation();
  if (e == 0) return QSeries::one(t);
  QSeries base = (e < 0) ? reciprocal(a) : a;
  std::uint64_t k = (e < 0) ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  QSeries result = QSeries::one(t);
  bool have_result = false;
  while (k > 0) {
    if (k & 1U) {
      result = have_result ? mul(result, base) : base;
      have_result = true;
    }
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

QSeries substitute(const QSeries& a, std::size_t t, std::size_t max_truncation) {
  if (t == 0) throw InvalidArgument("substitute requires t >= 1");
  if (t == 1 && a.truncation() <= max_truncation) return a;
  const std::size_t out_t = std::min(a.truncation() * t, max_truncation);
  std::vector<BigRational> c(out_t + 1);
  for (std::size_t n = 0; n * t <= out_t; ++n) c[n * t] = a[n];
  return QSeries(std::move(c));
}

QSeries shift(const QSeries& a, std::size_t m) {
  const std::size_t t = a.truncation();
  std::vector<BigRational> c(t + 1);
  for (std::size_t n = m; n <= t; ++n) c[n] = a[n - m];
  return QSeries(std::move(c));
}

QSeries truncate(const QSeries& a, std::size_t truncation) {
  if (truncation > a.truncation()) {
    throw TruncationExceeded("cannot extend series of truncation " + std::to_string(a.truncation()) +
                             " to " + std::to_string(truncation));
  }
  std::vector<BigRational> c(a.coefficients().begin(),
                             a.coefficients().begin() + static_cast<std::ptrdiff_t>(truncation) + 1);
  return QSeries(std::move(c));
}

}  // namespace convsum
