#include "csrbf/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csrbf {

SparseMatrix::SparseMatrix(Index rows, Index cols, std::vector<std::size_t> row_ptr,
                           std::vector<std::int32_t> col_idx, std::vector<double> values)
    : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
  if (rows_ < 0 || cols_ < 0 || row_ptr_.size() != static_cast<std::size_t>(rows_) + 1 ||
      col_idx_.size() != values_.size() || row_ptr_.back() != values_.size())
    throw std::invalid_argument("SparseMatrix: inconsistent CSR arrays");
  for (Index i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k + 1 < row_ptr_[i + 1]; ++k)
      if (col_idx_[k] >= col_idx_[k + 1])
        throw std::invalid_argument("SparseMatrix: column indices not strictly increasing");
  }
}

SparseMatrix SparseMatrix::identity(Index n) {
  std::vector<std::size_t> ptr(static_cast<std::size_t>(n) + 1);
  std::vector<std::int32_t> col(n);
  std::vector<double> val(n, 1.0);
  for (Index i = 0; i <= n; ++i) ptr[i] = static_cast<std::size_t>(i);
  for (Index i = 0; i < n; ++i) col[i] = static_cast<std::int32_t>(i);
  return SparseMatrix(n, n, std::move(ptr), std::move(col), std::move(val));
}

double SparseMatrix::coeff(Index row, Index col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::invalid_argument("SparseMatrix::coeff: index out of range");
  const auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(begin, end, static_cast<std::int32_t>(col));
  if (it == end || *it != static_cast<std::int32_t>(col)) return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

Matrix SparseMatrix::dense() const {
  Matrix out = Matrix::Zero(rows_, cols_);
  for (Index i = 0; i < rows_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) out(i, col_idx_[k]) = values_[k];
  return out;
}

void SparseBuilder::add(Index row, Index col, double value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::invalid_argument("SparseBuilder::add: index out of range");
  triplets_.push_back({row, col, value});
}

SparseMatrix SparseBuilder::build() {
  std::sort(triplets_.begin(), triplets_.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  std::vector<std::size_t> ptr(static_cast<std::size_t>(rows_) + 1, 0);
  std::vector<std::int32_t> col;
  std::vector<double> val;
  col.reserve(triplets_.size());
  val.reserve(triplets_.size());

  std::size_t k = 0;
  for (Index i = 0; i < rows_; ++i) {
    while (k < triplets_.size() && triplets_[k].row == i) {
      double sum = triplets_[k].value;
      const Index c = triplets_[k].col;
      ++k;
      while (k < triplets_.size() && triplets_[k].row == i && triplets_[k].col == c) {
        sum += triplets_[k].value;
        ++k;
      }
      if (std::abs(sum) >= kSparseDropTolerance) {
        col.push_back(static_cast<std::int32_t>(c));
        val.push_back(sum);
      }
    }
    ptr[i + 1] = val.size();
  }
  return SparseMatrix(rows_, cols_, std::move(ptr), std::move(col), std::move(val));
}

void spmv_into(const SparseMatrix& a, const double* x, double* y) {
  const auto& ptr = a.row_ptr();
  const auto& col = a.col_idx();
  const auto& val = a.values();
  const Index rows = a.rows();
  for (Index i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = ptr[i]; k < ptr[i + 1]; ++k) acc += val[k] * x[col[k]];
    y[i] = acc;
  }
}

Vector spmv(const SparseMatrix& a, const Vector& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("spmv: dimension mismatch");
  Vector y(a.rows());
  spmv_into(a, x.data(), y.data());
  return y;
}

}  // namespace csrbf
