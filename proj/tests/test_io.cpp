#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tracefem/driver.hpp"
#include "tracefem/io.hpp"

using namespace tracefem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("summary csv layout and determinism") {
  SummaryRow row;
  row.case_name = "sphere-steady";
  row.level = 3;
  row.h = 10.0 / 48;
  row.l2_u = 1.25e-3;
  row.minres_iters = 26;

  const std::string path = "io_test_summary.csv";
  write_summary_csv(path, {row, row});
  const std::string first = slurp(path);
  write_summary_csv(path, {row, row});
  CHECK(first == slurp(path));

  std::istringstream in(first);
  std::string header, line1, line2;
  std::getline(in, header);
  std::getline(in, line1);
  std::getline(in, line2);
  CHECK(header ==
        "case,level,h,c_tau,c_p,c_u,alpha,dt,l2_u,h1_u,l2_uT,l2_un,l2_p,"
        "minres_iters,avg_inner_A,avg_inner_S,wall_seconds");
  CHECK(line1 == line2);
  CHECK(line1.find("sphere-steady,3,0.208333333333,") == 0);
  CHECK(line1.find(",26,") != std::string::npos);
}

TEST_CASE("residual history csv") {
  KrylovReport report;
  report.residual_history = {1.0, 0.25, 0.0625};
  const std::string path = "io_test_residuals.csv";
  write_residuals_csv(path, report);
  const std::string text = slurp(path);
  CHECK(text == "iteration,residual\n0,1\n1,0.25\n2,0.0625\n");
}

TEST_CASE("vtk surface export") {
  auto d = discretize(sphere_level_set(), 1, cube_box(5.0 / 3.0));
  const int m = d->space.n_pressure_dofs();
  std::vector<double> u(3 * m, 0.0);
  for (int i = 0; i < m; ++i) u[3 * i + 2] = 1.0;
  const std::vector<double> p(m, 0.5);

  const std::string path = "io_test_fields.vtk";
  write_vtk_surface(path, d->space, d->surface, u, p);

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# vtk DataFile Version 3.0");
  std::getline(in, line);  // title
  std::getline(in, line);
  CHECK(line == "ASCII");
  std::getline(in, line);
  CHECK(line == "DATASET POLYDATA");
  std::getline(in, line);
  const std::size_t npoints = 3 * d->surface.triangles.size();
  CHECK(line == "POINTS " + std::to_string(npoints) + " double");

  // count coordinate lines, then check the POLYGONS header
  for (std::size_t i = 0; i < npoints; ++i) REQUIRE(std::getline(in, line));
  std::getline(in, line);
  CHECK(line == "POLYGONS " + std::to_string(d->surface.triangles.size()) +
                    " " + std::to_string(4 * d->surface.triangles.size()));

  const std::string text = slurp(path);
  CHECK(text.find("VECTORS velocity double") != std::string::npos);
  CHECK(text.find("SCALARS pressure double 1") != std::string::npos);
  CHECK(text.find("0.5\n") != std::string::npos);
}

TEST_CASE("matrix market export") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      2, 3, {{0, 0, 1.5}, {1, 2, -2.0}, {0, 1, 0.25}});
  const std::string path = "io_test_matrix.mtx";
  write_matrix_market(path, m);
  CHECK(slurp(path) ==
        "%%MatrixMarket matrix coordinate real general\n"
        "2 3 3\n"
        "1 1 1.5\n"
        "1 2 0.25\n"
        "2 3 -2\n");
}
