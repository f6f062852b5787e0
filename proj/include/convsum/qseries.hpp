#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "convsum/bigrational.hpp"

namespace convsum {

inline constexpr std::size_t kDefaultTruncation = 1000;
// Upper bound on the truncation produced by substitute().
inline constexpr std::size_t kMaxTruncation = 200000;

// Truncated power series sum_{n=0}^{T} c_n q^n over the rationals. Coefficients
// are trusted up to and including the truncation T.
class QSeries {
 public:
  // The zero series with the given truncation.
  explicit QSeries(std::size_t truncation);
  // Truncation is coefficients.size() - 1; the vector must be non-empty.
  explicit QSeries(std::vector<BigRational> coefficients);

  static QSeries zero(std::size_t truncation) { return QSeries(truncation); }
  static QSeries one(std::size_t truncation);
  static QSeries from_integers(std::span<const std::int64_t> coefficients);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const BigRational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  // Index of the first nonzero coefficient; truncation() + 1 for the zero series.
  std::size_t order() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<BigRational> coeffs_;
};

// All binary operations truncate to the smaller of the two truncations.
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries scale(const QSeries& a, const BigRational& factor);
QSeries mul(const QSeries& a, const QSeries& b);

// Multiplicative inverse. Throws ZeroConstantTerm when a_0 = 0.
QSeries reciprocal(const QSeries& a);

// a^e by repeated squaring; negative e goes through reciprocal().
QSeries pow(const QSeries& a, std::int64_t e);

// q -> q^t. The result truncation is min(a.truncation() * t, max_truncation).
QSeries substitute(const QSeries& a, std::size_t t, std::size_t max_truncation = kMaxTruncation);

// Multiply by q^m, keeping the truncation (the top m coefficients fall off).
QSeries shift(const QSeries& a, std::size_t m);

// Drop coefficients above `truncation` (which must not exceed a.truncation()).
QSeries truncate(const QSeries& a, std::size_t truncation);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const BigRational& c, const QSeries& a) { return scale(a, c); }

}  // namespace convsum
