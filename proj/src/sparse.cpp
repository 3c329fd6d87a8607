#include "tracefem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tracefem {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         std::vector<Triplet> triplets) {
  std::stable_sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });

  SparseMatrix m(rows, cols);
  m.col_indices_.reserve(triplets.size());
  m.values_.reserve(triplets.size());

  for (std::size_t i = 0; i < triplets.size();) {
    const int r = triplets[i].row;
    const int c = triplets[i].col;
    double sum = 0.0;
    for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c;
         ++i)
      sum += triplets[i].value;
    m.col_indices_.push_back(c);
    m.values_.push_back(sum);
    m.row_offsets_[r + 1] = static_cast<int>(m.values_.size());
  }
  for (int r = 0; r < rows; ++r)
    m.row_offsets_[r + 1] = std::max(m.row_offsets_[r + 1], m.row_offsets_[r]);
  return m;
}

void SparseMatrix::multiply(std::span<const double> x,
                            std::span<double> y) const {
  for (int r = 0; r < rows_; ++r) {
    double sum = 0.0;
    for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
      sum += values_[k] * x[col_indices_[k]];
    y[r] = sum;
  }
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_);
  multiply(x, y);
  return y;
}

double SparseMatrix::coeff(int row, int col) const {
  for (int k = row_offsets_[row]; k < row_offsets_[row + 1]; ++k)
    if (col_indices_[k] == col) return values_[k];
  return 0.0;
}

double SparseMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
      worst = std::max(worst,
                       std::abs(values_[k] - coeff(col_indices_[k], r)));
  return worst;
}

std::vector<double> SparseMatrix::diagonal() const {
  std::vector<double> d(rows_, 0.0);
  for (int r = 0; r < rows_; ++r) d[r] = coeff(r, r);
  return d;
}

void SparseMatrix::lower_solve(std::span<double> x) const {
  for (int r = 0; r < rows_; ++r) {
    double diag = 0.0;
    double sum = x[r];
    for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      const int c = col_indices_[k];
      if (c < r)
        sum -= values_[k] * x[c];
      else if (c == r)
        diag = values_[k];
    }
    if (diag == 0.0) throw std::runtime_error("lower_solve: zero diagonal");
    x[r] = sum / diag;
  }
}

void SparseMatrix::upper_solve(std::span<double> x) const {
  for (int r = rows_ - 1; r >= 0; --r) {
    double diag = 0.0;
    double sum = x[r];
    for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      const int c = col_indices_[k];
      if (c > r)
        sum -= values_[k] * x[c];
      else if (c == r)
        diag = values_[k];
    }
    if (diag == 0.0) throw std::runtime_error("upper_solve: zero diagonal");
    x[r] = sum / diag;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace tracefem
