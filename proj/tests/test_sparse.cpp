#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tracefem/sparse.hpp"

using namespace tracefem;

TEST_CASE("triplet assembly sums duplicates") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      2, 2, {{0, 0, 1.0}, {0, 0, 2.0}, {1, 1, 5.0}, {0, 1, -1.0}});
  CHECK(m.nnz() == 3);
  CHECK(m.coeff(0, 0) == doctest::Approx(3.0));
  CHECK(m.coeff(0, 1) == doctest::Approx(-1.0));
  CHECK(m.coeff(1, 0) == doctest::Approx(0.0));
  CHECK(m.coeff(1, 1) == doctest::Approx(5.0));
}

TEST_CASE("assembly is order independent") {
  const std::vector<Triplet> fwd = {{0, 1, 2.0}, {1, 0, 3.0}, {1, 1, 4.0}};
  std::vector<Triplet> rev(fwd.rbegin(), fwd.rend());
  const SparseMatrix a = SparseMatrix::from_triplets(2, 2, fwd);
  const SparseMatrix b = SparseMatrix::from_triplets(2, 2, rev);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(a.coeff(i, j) == b.coeff(i, j));
}

TEST_CASE("column indices strictly increase within rows") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      3, 3, {{1, 2, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}, {0, 2, 1.0}, {2, 0, 1.0}});
  const auto off = m.row_offsets();
  const auto cols = m.col_indices();
  for (int r = 0; r < m.rows(); ++r)
    for (int k = off[r] + 1; k < off[r + 1]; ++k) CHECK(cols[k] > cols[k - 1]);
}

TEST_CASE("matrix vector product") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      2, 3, {{0, 0, 1.0}, {0, 2, 2.0}, {1, 1, -1.0}});
  const std::vector<double> x = {1.0, 2.0, 3.0};
  const auto y = m.multiply(x);
  CHECK(y[0] == doctest::Approx(7.0));
  CHECK(y[1] == doctest::Approx(-2.0));
}

TEST_CASE("asymmetry measure") {
  const SparseMatrix sym = SparseMatrix::from_triplets(
      2, 2, {{0, 1, 2.0}, {1, 0, 2.0}, {0, 0, 1.0}, {1, 1, 1.0}});
  CHECK(sym.max_asymmetry() == 0.0);
  const SparseMatrix asym =
      SparseMatrix::from_triplets(2, 2, {{0, 1, 2.0}, {1, 0, 2.5}});
  CHECK(asym.max_asymmetry() == doctest::Approx(0.5));
}

TEST_CASE("triangular solves invert (D+L) and (D+U)") {
  // 3x3 with full diagonal and one entry per triangle
  const SparseMatrix m = SparseMatrix::from_triplets(
      3, 3,
      {{0, 0, 4.0}, {1, 1, 5.0}, {2, 2, 6.0}, {1, 0, 1.0}, {0, 2, 2.0}});
  std::vector<double> x = {4.0, 9.0, 12.0};
  m.lower_solve(x);  // (D+L) x = b
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(8.0 / 5));
  CHECK(x[2] == doctest::Approx(2.0));

  std::vector<double> y = {8.0, 5.0, 6.0};
  m.upper_solve(y);  // (D+U) y = b
  CHECK(y[2] == doctest::Approx(1.0));
  CHECK(y[1] == doctest::Approx(1.0));
  CHECK(y[0] == doctest::Approx(1.5));
}

TEST_CASE("zero diagonal in triangular solve is an error") {
  const SparseMatrix m =
      SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {0, 1, 1.0}});
  std::vector<double> x = {1.0, 1.0};
  CHECK_THROWS_AS(m.lower_solve(x), std::runtime_error);
}

TEST_CASE("vector helpers") {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {4, -5, 6};
  CHECK(dot(a, b) == doctest::Approx(12.0));
  CHECK(norm2(b) == doctest::Approx(std::sqrt(77.0)));
  std::vector<double> y = b;
  axpy(2.0, a, y);
  CHECK(y[0] == doctest::Approx(6.0));
  CHECK(y[1] == doctest::Approx(-1.0));
  CHECK(y[2] == doctest::Approx(12.0));
}

TEST_CASE("diagonal extraction") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      3, 3, {{0, 0, 2.0}, {1, 2, 7.0}, {2, 2, -3.0}});
  const auto d = m.diagonal();
  CHECK(d[0] == 2.0);
  CHECK(d[1] == 0.0);
  CHECK(d[2] == -3.0);
}
