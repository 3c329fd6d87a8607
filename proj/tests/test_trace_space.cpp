#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "tracefem/level_set.hpp"
#include "tracefem/trace_space.hpp"

using namespace tracefem;

TEST_CASE("single tet band") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  const NarrowBand band{{0}};
  const TraceSpace space = build_space(band, mesh);
  CHECK(space.n_pressure_dofs() == 4);
  CHECK(space.n_velocity_dofs() == 12);
}

TEST_CASE("two tets of one cube share vertices") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  // consecutive Kuhn tets of the same cube share the main diagonal and a face
  std::set<int> expect(mesh.tets[0].begin(), mesh.tets[0].end());
  expect.insert(mesh.tets[1].begin(), mesh.tets[1].end());
  const TraceSpace space = build_space(NarrowBand{{0, 1}}, mesh);
  CHECK(space.n_pressure_dofs() == static_cast<int>(expect.size()));
  CHECK(space.n_pressure_dofs() == 5);
}

TEST_CASE("empty band is rejected") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  CHECK_THROWS_AS(build_space(NarrowBand{}, mesh), std::invalid_argument);
}

TEST_CASE("sphere band dof count matches a set-union oracle") {
  const BackgroundMesh mesh = build_cube_mesh(2, cube_box(5.0 / 3.0));
  const P1LevelSet ls = interpolate_p1(sphere_level_set(), mesh);
  const auto [surface, band] = extract_cut_surface(ls);
  const TraceSpace space = build_space(band, mesh);

  std::set<int> oracle;
  for (int t : band.active_tets)
    oracle.insert(mesh.tets[t].begin(), mesh.tets[t].end());
  CHECK(space.n_pressure_dofs() == static_cast<int>(oracle.size()));

  // dof numbering follows sorted vertex ids and is contiguous
  for (int d = 0; d < space.n_pressure_dofs(); ++d) {
    CHECK(space.dof(space.active_vertices[d]) == d);
    if (d > 0) CHECK(space.active_vertices[d] > space.active_vertices[d - 1]);
  }
  CHECK(space.velocity_dof(space.active_vertices[2], 1) == 7);
}

TEST_CASE("basis values at vertices and partition of unity") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  for (int i = 0; i < 4; ++i) {
    const BasisEval e = eval_basis(mesh, 3, mesh.vertex(3, i));
    for (int j = 0; j < 4; ++j)
      CHECK(e.values[j] == doctest::Approx(i == j ? 1.0 : 0.0));
  }

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.05, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    double lam[4] = {dist(rng), dist(rng), dist(rng), 0.0};
    lam[3] = 1.0 - lam[0] - lam[1] - lam[2];
    Vec3 p{0, 0, 0};
    for (int i = 0; i < 4; ++i) p += lam[i] * mesh.vertex(7, i);
    const BasisEval e = eval_basis(mesh, 7, p);
    double sum = 0.0;
    Vec3 gsum{0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      sum += e.values[i];
      gsum += e.gradients[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(norm(gsum) < 1e-12);
  }
}

TEST_CASE("gradients reproduce a linear function") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  const BasisEval e = eval_basis(mesh, 5, mesh.vertex(5, 0));
  Vec3 grad{0, 0, 0};
  for (int i = 0; i < 4; ++i) grad += mesh.vertex(5, i)[0] * e.gradients[i];
  CHECK(norm(grad - Vec3{1, 0, 0}) < 1e-12);
}

TEST_CASE("points outside the tet are rejected") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  const Vec3 centroid = 0.25 * (mesh.vertex(0, 0) + mesh.vertex(0, 1) +
                                mesh.vertex(0, 2) + mesh.vertex(0, 3));
  const Vec3 outside = centroid + Vec3{10, 10, 10};
  CHECK_THROWS_AS(eval_basis(mesh, 0, outside), std::domain_error);
}

TEST_CASE("nodal interpolation") {
  const BackgroundMesh mesh = build_cube_mesh(1, cube_box(5.0 / 3.0));
  const P1LevelSet ls = interpolate_p1(sphere_level_set(), mesh);
  const auto [surface, band] = extract_cut_surface(ls);
  const TraceSpace space = build_space(band, mesh);

  const auto ones = interpolate_nodal(
      std::function<double(const Vec3&)>([](const Vec3&) { return 1.0; }),
      space);
  for (double c : ones) CHECK(c == 1.0);

  // a linear function is reproduced exactly at a tet centroid
  const auto lin = interpolate_nodal(
      std::function<double(const Vec3&)>([](const Vec3& x) { return x[1]; }),
      space);
  const int tet = band.active_tets[0];
  const Vec3 centroid = 0.25 * (mesh.vertex(tet, 0) + mesh.vertex(tet, 1) +
                                mesh.vertex(tet, 2) + mesh.vertex(tet, 3));
  const BasisEval e = eval_basis(mesh, tet, centroid);
  double val = 0.0;
  for (int i = 0; i < 4; ++i)
    val += lin[space.dof(mesh.tets[tet][i])] * e.values[i];
  CHECK(val == doctest::Approx(centroid[1]).epsilon(1e-13));

  const auto vec = interpolate_nodal(
      std::function<Vec3(const Vec3&)>(
          [](const Vec3& x) { return Vec3{x[0], 2 * x[1], -x[2]}; }),
      space);
  const Vec3 v0 = mesh.vertices[space.active_vertices[0]];
  CHECK(vec[0] == doctest::Approx(v0[0]));
  CHECK(vec[1] == doctest::Approx(2 * v0[1]));
  CHECK(vec[2] == doctest::Approx(-v0[2]));
}
