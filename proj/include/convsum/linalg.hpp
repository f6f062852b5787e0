#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convsum/bigrational.hpp"

namespace convsum {

using RationalRow = std::vector<BigRational>;

// Rank of a dense rational matrix by Gaussian elimination (first nonzero
// pivot in column order).
std::size_t matrix_rank(std::vector<RationalRow> rows);

// Incrementally built reduced row-echelon system for unknowns x_0..x_{n-1}
// with equations sum_j a_j x_j = b. Rows are fed one at a time; rows that
// are dependent on earlier ones are checked for consistency and dropped.
class EchelonSystem {
 public:
  explicit EchelonSystem(std::size_t unknowns);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivots_.size(); }
  bool inconsistent() const { return inconsistent_; }

  // Returns true when the row raised the rank.
  bool add_equation(RationalRow coefficients, BigRational rhs);

  // The unique solution once rank() == unknowns(); nullopt otherwise.
  std::optional<std::vector<BigRational>> solution() const;

 private:
  struct Pivot {
    std::size_t column;
    RationalRow row;  // leading entry 1 at `column`
    BigRational rhs;
  };

  std::size_t unknowns_;
  std::vector<Pivot> pivots_;
  bool inconsistent_ = false;
};

}  // namespace convsum
