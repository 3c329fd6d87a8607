#pragma once

#include <array>

#include "tracefem/geometry.hpp"

namespace tracefem {

/// Barycentric coordinates of a point with respect to a tetrahedron.
inline std::array<double, 4> barycentric_coords(const std::array<Vec3, 4>& v,
                                                const Vec3& p) {
  const double vol = tet_signed_volume(v[0], v[1], v[2], v[3]);
  std::array<double, 4> lam;
  lam[0] = tet_signed_volume(p, v[1], v[2], v[3]) / vol;
  lam[1] = tet_signed_volume(v[0], p, v[2], v[3]) / vol;
  lam[2] = tet_signed_volume(v[0], v[1], p, v[3]) / vol;
  lam[3] = tet_signed_volume(v[0], v[1], v[2], p) / vol;
  return lam;
}

/// Constant gradients of the four P1 hat functions on a tetrahedron.
inline std::array<Vec3, 4> p1_gradients(const std::array<Vec3, 4>& v) {
  std::array<Vec3, 4> g;
  const double vol6 = 6.0 * tet_signed_volume(v[0], v[1], v[2], v[3]);
  // grad(lambda_i) = (opposite face normal) * area-scaled / volume; computed
  // as cross products of the opposite edges.
  g[0] = cross(v[3] - v[1], v[2] - v[1]) * (1.0 / vol6);
  g[1] = cross(v[2] - v[0], v[3] - v[0]) * (1.0 / vol6);
  g[2] = cross(v[3] - v[0], v[1] - v[0]) * (1.0 / vol6);
  g[3] = cross(v[1] - v[0], v[2] - v[0]) * (1.0 / vol6);
  return g;
}

}  // namespace tracefem
