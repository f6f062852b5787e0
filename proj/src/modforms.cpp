#include "convsum/modforms.hpp"

#include <algorithm>
#include <map>

#include "convsum/arith.hpp"
#include "convsum/errors.hpp"
#include "convsum/linalg.hpp"

namespace convsum {

namespace {

QSeries divisor_series(unsigned k, std::int64_t constant, std::int64_t factor, std::size_t truncation) {
  if (truncation < 1) throw InvalidArgument("Eisenstein series need truncation >= 1");
  const SigmaTable table(k, static_cast<std::int64_t>(truncation));
  std::vector<BigRational> c(truncation + 1);
  c[0] = constant;
  for (std::size_t n = 1; n <= truncation; ++n) {
    c[n] = BigRational(BigInt(static_cast<unsigned long>(table(static_cast<std::int64_t>(n))))) * factor;
  }
  return QSeries(std::move(c));
}

// Kronecker symbol (-1/p) and (-3/p) for a prime p.
int kronecker_minus1(std::int64_t p) {
  if (p == 2) return 0;
  return (p % 4 == 1) ? 1 : -1;
}

int kronecker_minus3(std::int64_t p) {
  if (p == 3) return 0;
  return (p % 3 == 1) ? 1 : -1;
}

}  // namespace

QSeries eisenstein_L(std::size_t truncation) { return divisor_series(1, 1, -24, truncation); }

QSeries eisenstein_M(std::size_t truncation) { return divisor_series(3, 1, 240, truncation); }

Gamma0Data gamma0_data(int level) {
  if (level < 1) throw InvalidArgument("level must be positive");
  const auto factors = factorize(level);
  Gamma0Data g{};
  // index = N prod (1 + 1/p)
  g.index = level;
  for (const auto& [p, e] : factors) g.index = g.index / p * (p + 1);

  g.nu2 = 0;
  if (level % 4 != 0) {
    g.nu2 = 1;
    for (const auto& [p, e] : factors) g.nu2 *= 1 + kronecker_minus1(p);
  }
  g.nu3 = 0;
  if (level % 9 != 0) {
    g.nu3 = 1;
    for (const auto& [p, e] : factors) g.nu3 *= 1 + kronecker_minus3(p);
  }
  g.cusps = 0;
  for (std::int64_t d : divisors(level)) {
    const std::int64_t m = gcd(d, level / d);
    // Euler phi of m.
    std::int64_t phi = m;
    for (const auto& [p, e] : factorize(m)) phi = phi / p * (p - 1);
    g.cusps += phi;
  }
  // 12g = 12 + index - 3 nu2 - 4 nu3 - 6 cusps
  g.genus = (12 + g.index - 3 * g.nu2 - 4 * g.nu3 - 6 * g.cusps) / 12;
  return g;
}

int dim_M4(int level) {
  const Gamma0Data g = gamma0_data(level);
  // (k-1)(g-1) + floor(k/4) nu2 + floor(k/3) nu3 + (k/2) cusps at k = 4
  return static_cast<int>(3 * (g.genus - 1) + g.nu2 + g.nu3 + 2 * g.cusps);
}

int dim_E4(int level) { return static_cast<int>(gamma0_data(level).cusps); }

int dim_S4(int level) { return dim_M4(level) - dim_E4(level); }

std::size_t rank(std::span<const QSeries> series, std::size_t max_index) {
  std::vector<RationalRow> rows;
  rows.reserve(series.size());
  for (const QSeries& s : series) {
    if (s.truncation() < max_index) {
      throw TruncationExceeded("rank: series truncation " + std::to_string(s.truncation()) + " below max_index " +
                               std::to_string(max_index));
    }
    rows.emplace_back(s.coefficients().begin(),
                      s.coefficients().begin() + static_cast<std::ptrdiff_t>(max_index) + 1);
  }
  return matrix_rank(std::move(rows));
}

namespace {

NamedEtaQuotient named(std::string label, int level, std::map<int, int> exponents) {
  return NamedEtaQuotient{std::move(label), EtaQuotient(level, std::move(exponents))};
}

const std::map<int, std::vector<NamedEtaQuotient>>& registry() {
  static const std::map<int, std::vector<NamedEtaQuotient>> table = {
      {14,
       {
           named("A1", 14, {{1, 5}, {2, -1}, {7, 5}, {14, -1}}),
           named("A2", 14, {{1, 2}, {2, 2}, {7, 2}, {14, 2}}),
           named("A3", 14, {{1, -1}, {2, 5}, {7, -1}, {14, 5}}),
           named("A4", 14, {{1, 6}, {2, -2}, {7, -2}, {14, 6}}),
       }},
      {22,
       {
           named("B1", 22, {{1, 6}, {2, -2}, {11, 6}, {22, -2}}),
           named("B2", 22, {{1, 4}, {11, 4}}),
           named("B3", 22, {{1, 2}, {2, 2}, {11, 2}, {22, 2}}),
           named("B4", 22, {{2, 4}, {22, 4}}),
           named("B5", 22, {{1, -2}, {2, 6}, {11, -2}, {22, 6}}),
           named("B6", 22, {{1, -1}, {2, 1}, {11, 3}, {22, 5}}),
           named("B7", 22, {{1, -5}, {2, 9}, {11, 7}, {22, -3}}),
       }},
      {26,
       {
           named("C1", 26, {{1, 1}, {2, 5}, {13, 3}, {26, -1}}),
           named("C2", 26, {{1, 3}, {2, 3}, {13, 1}, {26, 1}}),
           named("C3", 26, {{1, 1}, {2, 3}, {13, 3}, {26, 1}}),
           named("C4", 26, {{1, 3}, {2, 1}, {13, 1}, {26, 3}}),
           named("C5", 26, {{1, 1}, {2, 1}, {13, 3}, {26, 3}}),
           named("C6", 26, {{1, 3}, {2, -1}, {13, 1}, {26, 5}}),
           named("C7", 26, {{1, -1}, {2, 3}, {13, 5}, {26, 1}}),
           named("C8", 26, {{1, -1}, {2, 5}, {13, 5}, {26, -1}}),
           named("C9", 26, {{1, 7}, {2, -3}, {13, -3}, {26, 7}}),
       }},
  };
  return table;
}

}  // namespace

const std::vector<NamedEtaQuotient>& registered_cusp_quotients(int level) {
  static const std::vector<NamedEtaQuotient> empty;
  const auto it = registry().find(level);
  return it == registry().end() ? empty : it->second;
}

std::optional<NamedEtaQuotient> find_registered_quotient(const std::string& label) {
  for (const auto& [level, list] : registry()) {
    for (const NamedEtaQuotient& q : list) {
      if (q.label == label) return q;
    }
  }
  return std::nullopt;
}

std::size_t Basis::eisenstein_count() const {
  return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [](const BasisElement& e) {
    return e.kind == BasisElement::Kind::Eisenstein;
  }));
}

std::vector<QSeries> Basis::cusp_series() const {
  std::vector<QSeries> out;
  for (const BasisElement& e : elements) {
    if (e.kind == BasisElement::Kind::Cusp) out.push_back(e.series);
  }
  return out;
}

Basis build_basis(int level, const std::vector<NamedEtaQuotient>& cusps, std::size_t truncation) {
  std::vector<QSeries> series;
  series.reserve(cusps.size());
  for (const NamedEtaQuotient& q : cusps) series.push_back(expand_eta_quotient(q.eta, truncation));
  return build_basis(level, cusps, std::move(series), truncation);
}

Basis build_basis(int level, const std::vector<NamedEtaQuotient>& cusps, std::vector<QSeries> cusp_series,
                  std::size_t truncation) {
  if (cusp_series.size() != cusps.size()) throw InvalidArgument("build_basis: one series per cusp quotient");
  const int required = dim_S4(level);
  if (static_cast<int>(cusps.size()) != required) {
    throw WrongCount("level " + std::to_string(level) + " needs " + std::to_string(required) +
                     " cusp forms, got " + std::to_string(cusps.size()));
  }

  Basis basis;
  basis.level = level;
  basis.truncation = truncation;

  const QSeries m = eisenstein_M(truncation);
  for (std::int64_t t : divisors(level)) {
    basis.elements.push_back(BasisElement{BasisElement::Kind::Eisenstein, static_cast<int>(t), 0,
                                          "E" + std::to_string(t), std::nullopt,
                                          substitute(m, static_cast<std::size_t>(t), truncation)});
  }

  for (std::size_t i = 0; i < cusps.size(); ++i) {
    const NamedEtaQuotient& q = cusps[i];
    if (q.eta.level() != level) {
      throw InvalidArgument(q.label + " is at level " + std::to_string(q.eta.level()) + ", not " +
                            std::to_string(level));
    }
    // (v) rather than (v'): B6 and B7 vanish at infinity but have order 0 at
    // the cusp d = 1. Full rank in M_4 still makes the set a basis.
    const LigozatReport report = check_ligozat(q.eta);
    if (!report.is_modular_form() || report.weight != BigRational(4)) {
      throw InvalidArgument(q.label + " is not a weight-4 modular form on Gamma0(" + std::to_string(level) + ")");
    }
    QSeries s = truncate(cusp_series[i], truncation);
    if (!s[0].is_zero() || s.order() > truncation || s[s.order()] != BigRational(1)) {
      throw InvalidArgument(q.label + " expansion does not start with a unit leading coefficient");
    }
    basis.elements.push_back(BasisElement{BasisElement::Kind::Cusp, 0, static_cast<int>(i + 1), q.label, q.eta,
                                          std::move(s)});
  }

  std::vector<QSeries> all;
  for (const BasisElement& e : basis.elements) all.push_back(e.series);
  const std::size_t r = rank(all, truncation);
  if (r != all.size()) {
    throw NotIndependent("basis at level " + std::to_string(level) + " has rank " + std::to_string(r) + " < " +
                         std::to_string(all.size()));
  }
  return basis;
}

std::vector<NamedEtaQuotient> select_cusp_quotients(int level, int bound, std::size_t truncation) {
  const auto& registered = registered_cusp_quotients(level);
  if (!registered.empty()) return registered;

  const int required = dim_S4(level);
  std::vector<NamedEtaQuotient> chosen;
  if (required == 0) return chosen;

  std::vector<RationalRow> rows;
  for (const EtaQuotient& eta : search_eta_quotients(level, 4, bound)) {
    const QSeries s = expand_eta_quotient(eta, truncation);
    rows.emplace_back(s.coefficients().begin(), s.coefficients().end());
    if (matrix_rank(rows) == rows.size()) {
      chosen.push_back(NamedEtaQuotient{"S" + std::to_string(chosen.size() + 1), eta});
      if (static_cast<int>(chosen.size()) == required) return chosen;
    } else {
      rows.pop_back();
    }
  }
  throw BasisIncomplete("eta quotients span " + std::to_string(chosen.size()) + " of the required " +
                        std::to_string(required) + " cusp dimensions at level " + std::to_string(level));
}

std::vector<BigRational> express_in_basis(const QSeries& target, const Basis& basis) {
  const std::size_t t = basis.truncation;
  if (target.truncation() < t) {
    throw TruncationExceeded("target truncation " + std::to_string(target.truncation()) +
                             " below basis truncation " + std::to_string(t));
  }
  const std::size_t k = basis.size();
  auto row_at = [&](std::size_t n) {
    RationalRow row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = basis.elements[i].series[n];
    return row;
  };

  EchelonSystem system(k);
  std::size_t n = 0;
  for (; n <= t && system.rank() < k; ++n) {
    system.add_equation(row_at(n), target[n]);
    if (system.inconsistent()) {
      throw Inconsistent("target is not in the span of the level " + std::to_string(basis.level) +
                         " basis (coefficient " + std::to_string(n) + ")");
    }
  }
  auto solution = system.solution();
  if (!solution) {
    throw SingularSystem("coefficient rows 0.." + std::to_string(t) + " have rank " +
                         std::to_string(system.rank()) + " < " + std::to_string(k));
  }
  const std::vector<BigRational>& x = *solution;

  for (; n <= t; ++n) {
    BigRational value;
    for (std::size_t i = 0; i < k; ++i) {
      const BigRational& c = basis.elements[i].series[n];
      if (!c.is_zero() && !x[i].is_zero()) value += x[i] * c;
    }
    if (value != target[n]) {
      throw Inconsistent("basis expansion disagrees with target at q^" + std::to_string(n));
    }
  }
  return x;
}

}  // namespace convsum
