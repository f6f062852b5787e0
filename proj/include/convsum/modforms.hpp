#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convsum/bigrational.hpp"
#include "convsum/eta.hpp"
#include "convsum/qseries.hpp"

namespace convsum {

// L(q) = E_2 = 1 - 24 sum sigma(n) q^n
QSeries eisenstein_L(std::size_t truncation);
// M(q) = E_4 = 1 + 240 sum sigma_3(n) q^n
QSeries eisenstein_M(std::size_t truncation);

struct Gamma0Data {
  std::int64_t index;   // [SL_2(Z) : Gamma_0(N)]
  std::int64_t nu2;     // elliptic points of order 2
  std::int64_t nu3;     // elliptic points of order 3
  std::int64_t cusps;
  std::int64_t genus;
};

Gamma0Data gamma0_data(int level);

// Weight-4 dimensions on Gamma_0(N).
int dim_M4(int level);
int dim_E4(int level);
int dim_S4(int level);

// Rank over Q of the matrix whose rows are the coefficients q^0..q^max_index.
std::size_t rank(std::span<const QSeries> series, std::size_t max_index);

struct NamedEtaQuotient {
  std::string label;
  EtaQuotient eta;
};

// The compiled-in cusp bases for levels 14 (A1..A4), 22 (B1..B7) and
// 26 (C1..C9); empty for every other level.
const std::vector<NamedEtaQuotient>& registered_cusp_quotients(int level);

// Looks up "A1", "B7", "C9", ... Returns nullopt for unknown labels.
std::optional<NamedEtaQuotient> find_registered_quotient(const std::string& label);

struct BasisElement {
  enum class Kind { Eisenstein, Cusp };

  Kind kind;
  int t = 0;                         // Eisenstein: M(q^t)
  int index = 0;                     // Cusp: 1-based position in the cusp block
  std::string label;                 // "E2", "A1", ...
  std::optional<EtaQuotient> eta;    // Cusp only
  QSeries series;
};

struct Basis {
  int level = 0;
  std::size_t truncation = 0;
  std::vector<BasisElement> elements;  // Eisenstein block (t ascending), then cusp block

  std::size_t size() const { return elements.size(); }
  std::size_t eisenstein_count() const;
  std::vector<QSeries> cusp_series() const;
};

// Expands the cusp quotients and assembles {M(q^t) : t | N} followed by
// them. Throws WrongCount, NotIndependent, or InvalidArgument when a
// quotient is not a weight-4 cusp form at level N.
Basis build_basis(int level, const std::vector<NamedEtaQuotient>& cusps, std::size_t truncation);

// Same, with the cusp expansions supplied by the caller (e.g. from a cache).
Basis build_basis(int level, const std::vector<NamedEtaQuotient>& cusps, std::vector<QSeries> cusp_series,
                  std::size_t truncation);

// Greedily picks, in search order, eta quotients of weight 4 and level N
// that raise the rank, until dim_S4(N) are found. Registered quotients are
// returned directly. Throws BasisIncomplete with found/required counts.
std::vector<NamedEtaQuotient> select_cusp_quotients(int level, int bound, std::size_t truncation);

// The unique x with target = sum x_i basis_i, solved on coefficient indices
// 0, 1, 2, ... until the system has full rank, then checked on every index up
// to the basis truncation. Throws SingularSystem or Inconsistent.
std::vector<BigRational> express_in_basis(const QSeries& target, const Basis& basis);

}  // namespace convsum
