#pragma once

#include <span>
#include <vector>

namespace tracefem {

struct Triplet {
  int row;
  int col;
  double value;
};

/// Compressed sparse row matrix.  Column indices are strictly increasing
/// within each row; symmetric matrices store both triangles explicitly.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols),
                                     row_offsets_(rows + 1, 0) {}

  /// Builds from a coordinate list; duplicate entries are summed.  Triplets
  /// are sorted (row, col) before accumulation, so the result is independent
  /// of the input order up to floating point associativity of equal keys.
  static SparseMatrix from_triplets(int rows, int cols,
                                    std::vector<Triplet> triplets);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const int> row_offsets() const { return row_offsets_; }
  std::span<const int> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

  /// y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;

  double coeff(int row, int col) const;
  double max_asymmetry() const;

  /// Solves (D + L) x = b (forward) or (D + U) x = b (backward) in place,
  /// for the SSOR preconditioner with relaxation 1.
  void lower_solve(std::span<double> x) const;
  void upper_solve(std::span<double> x) const;
  std::vector<double> diagonal() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_offsets_;
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

}  // namespace tracefem
