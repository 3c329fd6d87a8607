#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tracefem/background_mesh.hpp"
#include "tracefem/geometry.hpp"

namespace tracefem {

/// Implicit surface given as the zero level of a scalar field with analytic
/// gradient.
struct LevelSetField {
  std::function<double(const Vec3&)> phi;
  std::function<Vec3(const Vec3&)> grad_phi;
  std::string name;
};

/// phi(x) = |x - center| - 1, the unit sphere.
LevelSetField sphere_level_set(const Vec3& center = {0, 0, 0});

/// The genus-3 surface: sum of six quartic terms minus 13.
LevelSetField genus_surface_level_set();

/// Nodal values of a level-set field at the mesh vertices.  Values that are
/// exactly zero are shifted to +1e-12*h so that cut classification by sign is
/// unambiguous.
struct P1LevelSet {
  std::vector<double> nodal_values;
  const BackgroundMesh* mesh = nullptr;
};

P1LevelSet interpolate_p1(const LevelSetField& field, const BackgroundMesh& mesh);

}  // namespace tracefem
