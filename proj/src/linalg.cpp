#include "convsum/linalg.hpp"

#include <algorithm>

#include "convsum/errors.hpp"

namespace convsum {

std::size_t matrix_rank(std::vector<RationalRow> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const BigRational inv = BigRational(1) / rows[rank][c];
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const BigRational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[rank][j].is_zero()) rows[i][j] -= f * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

EchelonSystem::EchelonSystem(std::size_t unknowns) : unknowns_(unknowns) {}

bool EchelonSystem::add_equation(RationalRow coefficients, BigRational rhs) {
  if (coefficients.size() != unknowns_) throw InvalidArgument("equation width does not match unknowns");
  // Reduce against existing pivots (kept fully reduced, so order is free).
  for (const Pivot& p : pivots_) {
    if (coefficients[p.column].is_zero()) continue;
    const BigRational f = coefficients[p.column];
    for (std::size_t j = 0; j < unknowns_; ++j) {
      if (!p.row[j].is_zero()) coefficients[j] -= f * p.row[j];
    }
    rhs -= f * p.rhs;
  }
  const auto lead = std::find_if(coefficients.begin(), coefficients.end(),
                                 [](const BigRational& v) { return !v.is_zero(); });
  if (lead == coefficients.end()) {
    if (!rhs.is_zero()) inconsistent_ = true;
    return false;
  }
  const auto column = static_cast<std::size_t>(lead - coefficients.begin());
  const BigRational inv = BigRational(1) / coefficients[column];
  for (auto& v : coefficients) v *= inv;
  rhs *= inv;
  // Back-substitute the new pivot into the existing ones.
  for (Pivot& p : pivots_) {
    if (p.row[column].is_zero()) continue;
    const BigRational f = p.row[column];
    for (std::size_t j = 0; j < unknowns_; ++j) {
      if (!coefficients[j].is_zero()) p.row[j] -= f * coefficients[j];
    }
    p.rhs -= f * rhs;
  }
  pivots_.push_back(Pivot{column, std::move(coefficients), std::move(rhs)});
  return true;
}

std::optional<std::vector<BigRational>> EchelonSystem::solution() const {
  if (inconsistent_ || pivots_.size() != unknowns_) return std::nullopt;
  std::vector<BigRational> x(unknowns_);
  for (const Pivot& p : pivots_) x[p.column] = p.rhs;
  return x;
}

}  // namespace convsum
