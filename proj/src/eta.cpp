#include "convsum/eta.hpp"

#include <charconv>
#include <stdexcept>

#include "convsum/arith.hpp"
#include "convsum/errors.hpp"

namespace convsum {

EtaQuotient::EtaQuotient(int level, std::map<int, int> exponents) : level_(level) {
  if (level < 1) throw InvalidArgument("eta quotient level must be positive");
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw InvalidArgument("eta exponent key " + std::to_string(delta) + " does not divide level " +
                            std::to_string(level));
    }
    if (r != 0) exponents_.emplace(delta, r);
  }
  if (exponents_.empty()) throw InvalidArgument("eta quotient needs a nonzero exponent");
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("malformed eta exponent list '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

EtaQuotient EtaQuotient::parse(int level, std::string_view text) {
  std::map<int, int> exponents;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = (comma == std::string_view::npos) ? std::string_view() : rest.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw InvalidArgument("malformed eta exponent list '" + std::string(text) + "'");
    }
    const int delta = parse_int(item.substr(0, colon), text);
    const int r = parse_int(item.substr(colon + 1), text);
    if (!exponents.emplace(delta, r).second) {
      throw InvalidArgument("duplicate divisor " + std::to_string(delta) + " in '" + std::string(text) + "'");
    }
  }
  return EtaQuotient(level, std::move(exponents));
}

int EtaQuotient::exponent(int delta) const {
  const auto it = exponents_.find(delta);
  return it == exponents_.end() ? 0 : it->second;
}

std::vector<int> EtaQuotient::exponent_vector() const {
  std::vector<int> out;
  for (std::int64_t d : divisors(level_)) out.push_back(exponent(static_cast<int>(d)));
  return out;
}

std::int64_t EtaQuotient::weighted_sum() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : exponents_) s += static_cast<std::int64_t>(delta) * r;
  return s;
}

std::int64_t EtaQuotient::exponent_sum() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : exponents_) s += r;
  return s;
}

std::string EtaQuotient::to_string() const {
  std::string out;
  for (const auto& [delta, r] : exponents_) {
    if (!out.empty()) out += ',';
    out += std::to_string(delta) + ':' + std::to_string(r);
  }
  return out;
}

EtaQuotient combine(const EtaQuotient& a, const EtaQuotient& b) {
  if (a.level() != b.level()) throw InvalidArgument("combine: eta quotients at different levels");
  std::map<int, int> e = a.exponents();
  for (const auto& [delta, r] : b.exponents()) e[delta] += r;
  return EtaQuotient(a.level(), std::move(e));
}

QSeries euler_F(std::size_t truncation) {
  if (truncation < 1) throw InvalidArgument("euler_F requires truncation >= 1");
  // sum_k (-1)^k q^{k(3k-1)/2} over k in Z.
  std::vector<BigRational> c(truncation + 1);
  c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const auto a = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto b = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (a > truncation) break;
    const std::int64_t s = (k % 2 == 0) ? 1 : -1;
    c[a] = s;
    if (b <= truncation) c[b] = s;
  }
  return QSeries(std::move(c));
}

namespace {

// Cheap integer-only form of the cusp-form test, shared by the search.
struct OrderAccumulator {
  std::vector<std::int64_t> divs;
  std::int64_t level;

  // Orders scaled by N so that they stay integral:
  // N * sum gcd(delta,d)^2 r_delta / delta.
  bool all_positive(const std::vector<int>& r, bool strict) const {
    for (std::int64_t d : divs) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::int64_t g = gcd(divs[i], d);
        s += g * g * (level / divs[i]) * r[i];
      }
      if (strict ? s <= 0 : s < 0) return false;
    }
    return true;
  }
};

bool is_rational_square(const std::vector<std::int64_t>& divs, const std::vector<int>& r) {
  std::map<std::int64_t, std::int64_t> prime_exponents;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (r[i] == 0) continue;
    for (const auto& [p, e] : factorize(divs[i])) prime_exponents[p] += static_cast<std::int64_t>(e) * r[i];
  }
  for (const auto& [p, e] : prime_exponents) {
    if (e % 2 != 0) return false;
  }
  return true;
}

}  // namespace

LigozatReport check_ligozat(const EtaQuotient& f) {
  const std::int64_t n = f.level();
  const std::vector<std::int64_t> divs = divisors(n);
  const std::vector<int> r = f.exponent_vector();

  LigozatReport rep;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    s1 += divs[i] * r[i];
    s2 += (n / divs[i]) * r[i];
    total += r[i];
  }
  rep.cond_i = s1 % 24 == 0;
  rep.cond_ii = s2 % 24 == 0;
  rep.cond_iii = is_rational_square(divs, r);
  rep.weight = BigRational(BigInt(static_cast<long>(total)), BigInt(2));
  rep.cond_iv = total % 4 == 0;

  rep.cond_v = true;
  rep.cond_v_prime = true;
  for (std::int64_t d : divs) {
    BigRational order;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      const std::int64_t g = gcd(divs[i], d);
      order += BigRational(BigInt(static_cast<long>(g * g * r[i])), BigInt(static_cast<long>(divs[i])));
    }
    if (order.sign() < 0) rep.cond_v = false;
    if (order.sign() <= 0) rep.cond_v_prime = false;
    rep.orders.emplace(static_cast<int>(d), order);
  }
  return rep;
}

std::int64_t leading_exponent(const EtaQuotient& f) {
  const std::int64_t s = f.weighted_sum();
  if (s % 24 != 0) {
    throw FractionalLeadingExponent("eta quotient " + f.to_string() + " at level " + std::to_string(f.level()) +
                                    " has leading exponent " + std::to_string(s) + "/24");
  }
  return s / 24;
}

QSeries expand_eta_quotient(const EtaQuotient& f, std::size_t truncation) {
  const std::int64_t e0 = leading_exponent(f);
  if (e0 < 0) {
    throw NegativeLeadingExponent("eta quotient " + f.to_string() + " has negative leading exponent " +
                                  std::to_string(e0));
  }
  const QSeries base = euler_F(truncation);
  QSeries product = QSeries::one(truncation);
  for (const auto& [delta, r] : f.exponents()) {
    const QSeries factor = substitute(base, static_cast<std::size_t>(delta), truncation);
    product = mul(product, pow(factor, r));
  }
  return shift(product, static_cast<std::size_t>(e0));
}

std::vector<EtaQuotient> search_eta_quotients(int level, int weight, int bound) {
  if (level < 1) throw InvalidArgument("search level must be positive");
  if (bound < 1) throw InvalidArgument("search bound must be >= 1");
  if (weight < 1) throw InvalidArgument("search weight must be positive");
  if (weight % 2 != 0) return {};

  const std::vector<std::int64_t> divs = divisors(level);
  const std::size_t m = divs.size();
  const OrderAccumulator orders{divs, level};
  const std::int64_t target_sum = 2 * static_cast<std::int64_t>(weight);

  std::vector<EtaQuotient> found;
  std::vector<int> r(m, -bound);
  // The last exponent is fixed by the weight, so enumerate the first m-1
  // coordinates lexicographically; the order of full vectors is unchanged.
  while (true) {
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) partial += r[i];
    const std::int64_t last = target_sum - partial;
    if (last >= -bound && last <= bound) {
      r[m - 1] = static_cast<int>(last);
      std::int64_t s1 = 0;
      std::int64_t s2 = 0;
      for (std::size_t i = 0; i < m; ++i) {
        s1 += divs[i] * r[i];
        s2 += (level / divs[i]) * r[i];
      }
      if (s1 % 24 == 0 && s2 % 24 == 0 && orders.all_positive(r, true) && is_rational_square(divs, r)) {
        std::map<int, int> e;
        for (std::size_t i = 0; i < m; ++i) e.emplace(static_cast<int>(divs[i]), r[i]);
        found.emplace_back(level, std::move(e));
      }
    }
    // Odometer increment over coordinates 0..m-2 (most significant first).
    if (m == 1) break;
    std::size_t pos = m - 2;
    while (true) {
      if (r[pos] < bound) {
        ++r[pos];
        break;
      }
      r[pos] = -bound;
      if (pos == 0) return found;
      --pos;
    }
  }
  return found;
}

}  // namespace convsum
