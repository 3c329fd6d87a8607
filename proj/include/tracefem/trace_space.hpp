#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tracefem/background_mesh.hpp"
#include "tracefem/cut_surface.hpp"

namespace tracefem {

/// P1 degree-of-freedom bookkeeping restricted to the narrow band.
///
/// Scalar (pressure) dofs are numbered 0..m-1 following the sorted order of
/// the active vertex ids.  Vector (velocity) dofs are interleaved per vertex:
/// dof of component c at scalar dof d is 3*d + c, so n = 3*m.
struct TraceSpace {
  std::vector<int> active_vertices;   // sorted mesh vertex ids
  std::vector<int> vertex_to_dof;     // mesh vertex id -> scalar dof or -1
  const BackgroundMesh* mesh = nullptr;
  const NarrowBand* band = nullptr;

  int n_pressure_dofs() const { return static_cast<int>(active_vertices.size()); }
  int n_velocity_dofs() const { return 3 * n_pressure_dofs(); }

  int dof(int vertex) const { return vertex_to_dof[vertex]; }
  int velocity_dof(int vertex, int component) const {
    return 3 * vertex_to_dof[vertex] + component;
  }
};

/// Throws std::invalid_argument on an empty band.
TraceSpace build_space(const NarrowBand& band, const BackgroundMesh& mesh);

struct BasisEval {
  std::array<double, 4> values;
  std::array<Vec3, 4> gradients;
};

/// P1 basis values and (constant) gradients of a tet at a point.  Throws
/// std::domain_error when the point lies outside the tet beyond a 1e-10
/// barycentric tolerance.
BasisEval eval_basis(const BackgroundMesh& mesh, int tet, const Vec3& point);

/// Nodal interpolation of a scalar function: one coefficient per scalar dof.
std::vector<double> interpolate_nodal(
    const std::function<double(const Vec3&)>& f, const TraceSpace& space);

/// Nodal interpolation of a vector function, interleaved velocity layout.
std::vector<double> interpolate_nodal(
    const std::function<Vec3(const Vec3&)>& f, const TraceSpace& space);

}  // namespace tracefem
