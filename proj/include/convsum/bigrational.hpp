#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace convsum {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

// Exact rational number, always stored in lowest terms with a positive
// denominator. Backed by GMP; every constructor canonicalizes.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  BigRational(const BigInt& value) : value_(value) {}                    // NOLINT
  BigRational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "num/den" or a bare integer "num". Throws InvalidArgument.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // Always "num/den", including "25/1".
  std::string to_string() const;

  BigRational operator-() const { return from_canonical(-value_); }
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Wraps a value the caller guarantees is already canonical.
  static BigRational from_canonical(mpq_class value);

 private:
  mpq_class value_;
};

inline std::string to_string(const BigRational& value) { return value.to_string(); }

}  // namespace convsum
