#pragma once

#include <vector>

#include "creg/field.hpp"

namespace creg {

using DenseVector = std::vector<Scalar>;

/// A subspace of GF(p)^n kept in reduced row echelon form, grown one
/// vector at a time.
class RowEchelon {
 public:
  RowEchelon(PrimeField field, int n) : field_(field), n_(n) {}

  int ambient() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Adds v to the span; returns false if it was already in it.
  bool insert(DenseVector v);
  /// Reduces v against the echelon rows in place.
  void reduce(DenseVector& v) const;
  /// Columns without a pivot, increasing.
  std::vector<int> free_columns() const;
  bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }

 private:
  PrimeField field_;
  int n_;
  std::vector<DenseVector> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_ = std::vector<int>(static_cast<std::size_t>(n_), -1);
};

/// Rank of a list of vectors of equal length.
int rank_of(const PrimeField& field, const std::vector<DenseVector>& rows, int n);

}  // namespace creg
