#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rigidpack/field.hpp"

namespace rigidpack::ff {

/// Row-major dense matrix over GF(p).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

/// Rank by Gaussian elimination on a scratch copy. Pivot = first nonzero.
std::size_t rank(const DenseMatrix& m);

/// Rank of the submatrix formed by the selected rows (repeats allowed).
/// Throws std::out_of_range on a bad index.
std::size_t rank_of_rows(const DenseMatrix& m, std::span<const std::size_t> rows);

/// Row-by-row elimination into a semi-echelon basis.
///
/// Each accepted row is reduced against the current basis; the basis also
/// keeps, for every echelon row, its expression in terms of the accepted
/// input rows. That lets `express` return the coefficients of a dependent
/// row over the accepted rows, whose support is the fundamental circuit.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  /// Number of accepted (linearly independent) rows.
  std::size_t size() const { return pivots_.size(); }

  /// Adds the row if it is independent of the accepted rows.
  bool insert(std::span<const Fp> row);

  /// True if the row lies in the span of the accepted rows.
  bool in_span(std::span<const Fp> row) const;

  /// Coefficients c with row = sum_i c[i] * accepted_i, or nullopt when the
  /// row is independent. accepted_i is the i-th row for which insert
  /// returned true.
  std::optional<std::vector<Fp>> express(std::span<const Fp> row) const;

 private:
  // Reduces `work` in place; fills coef[k] with the multiple of echelon row k
  // removed. Returns true if the residual is zero.
  bool reduce(std::vector<Fp>& work, std::vector<Fp>* coef) const;

  std::size_t cols_;
  std::vector<std::vector<Fp>> echelon_;
  std::vector<std::size_t> pivots_;
  // transform_[k][j]: coefficient of accepted row j in echelon row k (j <= k).
  std::vector<std::vector<Fp>> transform_;
};

}  // namespace rigidpack::ff
