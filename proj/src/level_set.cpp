#include "tracefem/level_set.hpp"

#include <cmath>

namespace tracefem {

LevelSetField sphere_level_set(const Vec3& center) {
  LevelSetField f;
  f.name = "sphere";
  f.phi = [center](const Vec3& x) { return norm(x - center) - 1.0; };
  f.grad_phi = [center](const Vec3& x) { return normalized(x - center); };
  return f;
}

LevelSetField genus_surface_level_set() {
  LevelSetField f;
  f.name = "genus3";
  f.phi = [](const Vec3& p) {
    const double x = p[0], y = p[1], z = p[2];
    auto sq = [](double t) { return t * t; };
    return sq(x * x + y * y - 4.0) + sq(y * y - 1.0) + sq(y * y + z * z - 4.0) +
           sq(x * x - 1.0) + sq(x * x + z * z - 4.0) + sq(z * z - 1.0) - 13.0;
  };
  f.grad_phi = [](const Vec3& p) {
    const double x = p[0], y = p[1], z = p[2];
    const double xy = x * x + y * y - 4.0;
    const double yz = y * y + z * z - 4.0;
    const double xz = x * x + z * z - 4.0;
    return Vec3{4.0 * x * (xy + xz + (x * x - 1.0)),
                4.0 * y * (xy + yz + (y * y - 1.0)),
                4.0 * z * (yz + xz + (z * z - 1.0))};
  };
  return f;
}

P1LevelSet interpolate_p1(const LevelSetField& field, const BackgroundMesh& mesh) {
  P1LevelSet ls;
  ls.mesh = &mesh;
  ls.nodal_values.resize(mesh.vertices.size());
  const double eps = 1e-12 * mesh.h;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    double val = field.phi(mesh.vertices[v]);
    if (val == 0.0) val = eps;
    ls.nodal_values[v] = val;
  }
  return ls;
}

}  // namespace tracefem
