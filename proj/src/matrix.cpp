#include "rigidpack/matrix.hpp"

#include <stdexcept>
#include <string>

namespace rigidpack::ff {

namespace {

std::size_t eliminate(std::vector<Fp>& a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    Fp inv = a[rank * cols + c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Fp f = a[r * cols + c];
      if (f.is_zero()) continue;
      f *= inv;
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] -= f * a[rank * cols + j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const DenseMatrix& m) {
  std::vector<Fp> scratch(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::copy(row.begin(), row.end(), scratch.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  return eliminate(scratch, m.rows(), m.cols());
}

std::size_t rank_of_rows(const DenseMatrix& m, std::span<const std::size_t> rows) {
  std::vector<Fp> scratch(rows.size() * m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= m.rows()) throw std::out_of_range("row index " + std::to_string(rows[i]) + " out of range");
    auto row = m.row(rows[i]);
    std::copy(row.begin(), row.end(), scratch.begin() + static_cast<std::ptrdiff_t>(i * m.cols()));
  }
  return eliminate(scratch, rows.size(), m.cols());
}

bool IncrementalBasis::reduce(std::vector<Fp>& work, std::vector<Fp>* coef) const {
  if (coef) coef->assign(pivots_.size(), Fp{});
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Fp f = work[pivots_[k]];
    if (f.is_zero()) continue;
    if (coef) (*coef)[k] = f;
    // Echelon row k is zero left of its pivot and normalized to 1 there.
    const auto& e = echelon_[k];
    for (std::size_t j = pivots_[k]; j < cols_; ++j) work[j] -= f * e[j];
  }
  for (Fp x : work)
    if (!x.is_zero()) return false;
  return true;
}

bool IncrementalBasis::insert(std::span<const Fp> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  std::vector<Fp> work(row.begin(), row.end());
  std::vector<Fp> coef;
  if (reduce(work, &coef)) return false;

  // new echelon row = input - sum_k coef[k] * echelon_k
  const std::size_t r = pivots_.size();
  std::vector<Fp> comb(r + 1);
  comb[r] = Fp(1);
  for (std::size_t k = 0; k < r; ++k) {
    if (coef[k].is_zero()) continue;
    const auto& t = transform_[k];
    for (std::size_t j = 0; j < t.size(); ++j) comb[j] -= coef[k] * t[j];
  }
  std::size_t pivot = 0;
  while (work[pivot].is_zero()) ++pivot;
  Fp inv = work[pivot].inverse();
  for (std::size_t j = pivot; j < cols_; ++j) work[j] *= inv;
  for (auto& c : comb) c *= inv;

  echelon_.push_back(std::move(work));
  pivots_.push_back(pivot);
  transform_.push_back(std::move(comb));
  return true;
}

bool IncrementalBasis::in_span(std::span<const Fp> row) const {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  std::vector<Fp> work(row.begin(), row.end());
  return reduce(work, nullptr);
}

std::optional<std::vector<Fp>> IncrementalBasis::express(std::span<const Fp> row) const {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  std::vector<Fp> work(row.begin(), row.end());
  std::vector<Fp> coef;
  if (!reduce(work, &coef)) return std::nullopt;
  std::vector<Fp> out(pivots_.size());
  for (std::size_t k = 0; k < coef.size(); ++k) {
    if (coef[k].is_zero()) continue;
    const auto& t = transform_[k];
    for (std::size_t j = 0; j < t.size(); ++j) out[j] += coef[k] * t[j];
  }
  return out;
}

}  // namespace rigidpack::ff
