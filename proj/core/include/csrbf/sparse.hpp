#pragma once

#include <cstdint>
#include <vector>

#include "csrbf/types.hpp"

namespace csrbf {

/// Stored entries below this magnitude are dropped at build time; exact
/// zeros appear at the kernel support boundary.
inline constexpr double kSparseDropTolerance = 1e-14;

/// Row-compressed sparse matrix. Column indices are strictly increasing
/// within each row; no stored value is smaller in magnitude than
/// kSparseDropTolerance.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols, std::vector<std::size_t> row_ptr,
               std::vector<std::int32_t> col_idx, std::vector<double> values);

  static SparseMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nonzeros() const { return values_.size(); }

  /// Entry lookup by binary search; absent entries read as zero.
  double coeff(Index row, Index col) const;

  Matrix dense() const;

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::int32_t>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::int32_t> col_idx_;
  std::vector<double> values_;
};

/// Triplet accumulator. Duplicate (row, col) entries are summed; entries
/// below the drop tolerance are discarded when the matrix is built.
class SparseBuilder {
 public:
  SparseBuilder(Index rows, Index cols) : rows_(rows), cols_(cols) {}

  void add(Index row, Index col, double value);
  SparseMatrix build();

 private:
  struct Triplet {
    Index row;
    Index col;
    double value;
  };
  Index rows_;
  Index cols_;
  std::vector<Triplet> triplets_;
};

/// y = A x. Rows are processed one at a time in ascending order; within a
/// row the products accumulate in column order, so the result is bitwise
/// deterministic.
Vector spmv(const SparseMatrix& a, const Vector& x);

/// Raw kernel behind spmv; x and y must not alias. y receives the product
/// for all rows, overwriting previous contents.
void spmv_into(const SparseMatrix& a, const double* x, double* y);

}  // namespace csrbf
