#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace envkit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector zero_vector(std::size_t dim);
IntVector unit_vector(std::size_t dim, std::size_t at);
bool is_zero(const IntVector& v);
IntVector& add_scaled(IntVector& acc, const IntVector& v, const Integer& factor);

// Row-style Hermite basis of a sublattice of Z^dim.
//
// Columns are scanned in `priority` order: a row's pivot is its first
// nonzero entry in that order, pivots are positive, and after normalize()
// every entry in a pivot column of an earlier row lies in [0, pivot).
class HermiteBasis {
 public:
  HermiteBasis() = default;
  explicit HermiteBasis(std::size_t dim);
  HermiteBasis(std::size_t dim, std::vector<std::size_t> priority);

  void insert(IntVector v);
  void normalize();

  // Unique representative of v modulo the lattice: pivot coordinates end
  // up in [0, pivot). Valid with or without normalize().
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const { return is_zero(reduce(v)); }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  // Rows in pivot-priority order.
  const std::vector<IntVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::vector<std::size_t> free_columns() const;

  friend bool operator==(const HermiteBasis& a, const HermiteBasis& b) {
    return a.dim_ == b.dim_ && a.priority_ == b.priority_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t leading_rank(const IntVector& v) const;  // position in priority_

  std::size_t dim_ = 0;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> rank_of_column_;  // inverse of priority_
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
  std::size_t pending_ = 0;
};

// Nonzero invariant factors d1 | d2 | ... of the integer row span, as
// positive integers.
std::vector<Integer> smith_invariants(std::vector<IntVector> rows);
// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(std::vector<IntVector> square);
std::size_t rank_of(const std::vector<IntVector>& rows);

std::string format_vector(const IntVector& v, const std::vector<std::string>& names);

}  // namespace envkit
