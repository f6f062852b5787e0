#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "convsum/bigrational.hpp"
#include "convsum/qseries.hpp"

namespace convsum {

// prod_{delta | N} eta(delta z)^{r_delta}. Zero exponents are not stored.
class EtaQuotient {
 public:
  // Throws InvalidArgument if a key does not divide the level or every
  // exponent is zero.
  EtaQuotient(int level, std::map<int, int> exponents);

  // Parses "1:5,2:-1,7:5,14:-1".
  static EtaQuotient parse(int level, std::string_view exponents);

  int level() const { return level_; }
  const std::map<int, int>& exponents() const { return exponents_; }
  int exponent(int delta) const;
  // Exponents over all divisors of the level, in increasing divisor order.
  std::vector<int> exponent_vector() const;

  // sum delta * r_delta
  std::int64_t weighted_sum() const;
  // sum r_delta
  std::int64_t exponent_sum() const;

  // Inverse of parse(); divisors ascending.
  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  int level_;
  std::map<int, int> exponents_;
};

// Exponent-wise sum, i.e. the product of the two eta quotients.
EtaQuotient combine(const EtaQuotient& a, const EtaQuotient& b);

struct LigozatReport {
  bool cond_i = false;    // sum delta r_delta = 0 mod 24
  bool cond_ii = false;   // sum (N/delta) r_delta = 0 mod 24
  bool cond_iii = false;  // prod delta^{r_delta} is a rational square
  BigRational weight;     // (1/2) sum r_delta
  bool cond_iv = false;   // weight is an even integer
  std::map<int, BigRational> orders;  // d | N -> sum gcd(delta, d)^2 r_delta / delta
  bool cond_v = false;       // all orders >= 0
  bool cond_v_prime = false; // all orders > 0

  bool is_modular_form() const { return cond_i && cond_ii && cond_iii && cond_iv && cond_v; }
  bool is_cusp_form() const { return cond_i && cond_ii && cond_iii && cond_iv && cond_v_prime; }
};

// prod_{n >= 1} (1 - q^n), via the pentagonal number theorem.
QSeries euler_F(std::size_t truncation);

LigozatReport check_ligozat(const EtaQuotient& f);

// Exponent of the leading q-power, sum delta r_delta / 24. Throws
// FractionalLeadingExponent when 24 does not divide the sum.
std::int64_t leading_exponent(const EtaQuotient& f);

// q^{e0} prod_delta F(q^delta)^{r_delta}. Throws FractionalLeadingExponent
// or NegativeLeadingExponent.
QSeries expand_eta_quotient(const EtaQuotient& f, std::size_t truncation);

// Every quotient at level N with exponents in [-bound, bound] satisfying all
// Newman-Ligozat cusp-form conditions at the given weight, in lexicographic
// order of exponent_vector().
std::vector<EtaQuotient> search_eta_quotients(int level, int weight, int bound);

}  // namespace convsum
