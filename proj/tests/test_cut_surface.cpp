#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "tracefem/cut_surface.hpp"
#include "tracefem/quadrature.hpp"

using namespace tracefem;

namespace {

const std::array<Vec3, 4> kUnitTet = {Vec3{0, 0, 0}, Vec3{1, 0, 0},
                                      Vec3{0, 1, 0}, Vec3{0, 0, 1}};

std::array<double, 3> key(const Vec3& p) { return {p[0], p[1], p[2]}; }

double sphere_area_error(int level) {
  const BackgroundMesh mesh = build_cube_mesh(level, cube_box(5.0 / 3.0));
  const P1LevelSet ls = interpolate_p1(sphere_level_set(), mesh);
  const auto [surface, band] = extract_cut_surface(ls);
  return std::abs(surface.total_area() - 4.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("one vertex below: midpoint triangle") {
  std::array<SurfaceTriangle, 2> out;
  const int count = marching_tet(kUnitTet, {-1, 1, 1, 1}, out);
  REQUIRE(count == 1);
  // cuts at the midpoints of the three edges at vertex 0
  const double expected = triangle_area({0.5, 0, 0}, {0, 0.5, 0}, {0, 0, 0.5});
  CHECK(out[0].area == doctest::Approx(expected));
  CHECK(norm(out[0].normal) == doctest::Approx(1.0));
  // values grow away from vertex 0, so the normal points away from it
  CHECK(dot(out[0].normal, Vec3{1, 1, 1}) > 0.0);
}

TEST_CASE("two vertices below: planar quad split in two") {
  std::array<SurfaceTriangle, 2> out;
  const int count = marching_tet(kUnitTet, {-1, -1, 1, 1}, out);
  REQUIRE(count == 2);
  CHECK(out[0].area > 0.0);
  CHECK(out[1].area > 0.0);
  // both pieces of the planar quad share one normal direction
  CHECK(std::abs(dot(out[0].normal, out[1].normal)) == doctest::Approx(1.0));
}

TEST_CASE("all 14 sign patterns yield valid triangles") {
  for (int mask = 1; mask < 15; ++mask) {
    std::array<double, 4> values;
    for (int v = 0; v < 4; ++v) values[v] = (mask >> v) & 1 ? 1.0 : -1.0;
    std::array<SurfaceTriangle, 2> out;
    const int count = marching_tet(kUnitTet, values, out);
    const int below = 4 - std::popcount(static_cast<unsigned>(mask));
    CHECK(count == (below == 2 ? 2 : 1));
    for (int t = 0; t < count; ++t) {
      CHECK(out[t].area > 0.0);
      CHECK(norm(out[t].normal) == doctest::Approx(1.0));
      CHECK(out[t].area ==
            doctest::Approx(triangle_area(out[t].points[0], out[t].points[1],
                                          out[t].points[2])));
    }
  }
}

TEST_CASE("no sign change yields no triangles") {
  std::array<SurfaceTriangle, 2> out;
  CHECK(marching_tet(kUnitTet, {1, 1, 1, 1}, out) == 0);
  CHECK(marching_tet(kUnitTet, {-2, -1, -3, -4}, out) == 0);
}

TEST_CASE("sphere area approaches the exact value") {
  const double e2 = sphere_area_error(2);
  const double e3 = sphere_area_error(3);
  CHECK(e2 < 0.05 * 4.0 * std::numbers::pi);
  CHECK(e3 < 0.015 * 4.0 * std::numbers::pi);
  // second-order geometric accuracy: the error shrinks ~4x per level
  CHECK(e3 < e2 / 3.0);
}

TEST_CASE("extracted sphere surface is watertight") {
  const BackgroundMesh mesh = build_cube_mesh(2, cube_box(5.0 / 3.0));
  const P1LevelSet ls = interpolate_p1(sphere_level_set(), mesh);
  const auto [surface, band] = extract_cut_surface(ls);
  REQUIRE(!surface.triangles.empty());
  CHECK(band.active_tets.size() > 0);

  // every edge must be used exactly twice, with bitwise-equal endpoints
  std::map<std::pair<std::array<double, 3>, std::array<double, 3>>, int> edges;
  for (const auto& tri : surface.triangles)
    for (int e = 0; e < 3; ++e) {
      auto a = key(tri.points[e]);
      auto b = key(tri.points[(e + 1) % 3]);
      if (b < a) std::swap(a, b);
      edges[{a, b}]++;
    }
  for (const auto& [edge, count] : edges) CHECK(count == 2);
}

TEST_CASE("band tets are exactly the sign-changing ones") {
  const BackgroundMesh mesh = build_cube_mesh(1, cube_box(5.0 / 3.0));
  const P1LevelSet ls = interpolate_p1(sphere_level_set(), mesh);
  const auto [surface, band] = extract_cut_surface(ls);
  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    bool pos = false, neg = false;
    for (int v = 0; v < 4; ++v)
      (ls.nodal_values[mesh.tets[t][v]] > 0 ? pos : neg) = true;
    const bool in_band = std::binary_search(
        band.active_tets.begin(), band.active_tets.end(), static_cast<int>(t));
    CHECK(in_band == (pos && neg));
  }
}

TEST_CASE("missing the surface is an error") {
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(0.4));
  const P1LevelSet ls = interpolate_p1(sphere_level_set(), mesh);
  CHECK_THROWS_AS(extract_cut_surface(ls), std::runtime_error);
}

TEST_CASE("analytic normals") {
  const LevelSetField f = sphere_level_set();
  const BackgroundMesh mesh = build_cube_mesh(2, cube_box(5.0 / 3.0));
  const P1LevelSet ls = interpolate_p1(f, mesh);
  const auto [surface, band] = extract_cut_surface(ls);
  const NormalField normals(f, mesh, NormalMode::analytic);
  const Vec3 n = normals(band.active_tets[0], surface.triangles[0].points[0]);
  const Vec3 exact = normalized(surface.triangles[0].points[0]);
  CHECK(norm(n - exact) < 1e-12);
}

TEST_CASE("quadratic interpolant reproduces a linear field") {
  LevelSetField plane;
  plane.phi = [](const Vec3& x) { return x[0] + 0.1; };
  plane.grad_phi = [](const Vec3&) { return Vec3{1, 0, 0}; };
  const BackgroundMesh mesh = build_cube_mesh(0, cube_box(1.0));
  const Vec3 n = discrete_normal(plane, mesh, 0, mesh.vertex(0, 0),
                                 NormalMode::p2_interpolant);
  CHECK(norm(n - Vec3{1, 0, 0}) < 1e-12);
}

TEST_CASE("interpolated normals converge to analytic ones") {
  const LevelSetField f = sphere_level_set();
  double prev = 0.0;
  for (int level : {2, 3}) {
    const BackgroundMesh mesh = build_cube_mesh(level, cube_box(5.0 / 3.0));
    const P1LevelSet ls = interpolate_p1(f, mesh);
    const auto [surface, band] = extract_cut_surface(ls);
    double worst = 0.0;
    for (const auto& tri : surface.triangles) {
      const auto rule = surface_quadrature(tri.points, 2);
      for (const auto& q : rule.points) {
        const Vec3 np =
            discrete_normal(f, mesh, tri.parent_tet, q, NormalMode::p2_interpolant);
        const Vec3 na =
            discrete_normal(f, mesh, tri.parent_tet, q, NormalMode::analytic);
        worst = std::max(worst, std::acos(std::min(1.0, dot(np, na))));
      }
    }
    if (level == 3) CHECK(worst < prev / 2.5);
    prev = worst;
  }
}
