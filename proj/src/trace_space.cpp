#include "tracefem/trace_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracefem/p1.hpp"

namespace tracefem {

TraceSpace build_space(const NarrowBand& band, const BackgroundMesh& mesh) {
  if (band.active_tets.empty())
    throw std::invalid_argument("build_space: empty narrow band");

  TraceSpace space;
  space.mesh = &mesh;
  space.band = &band;
  space.vertex_to_dof.assign(mesh.vertices.size(), -1);

  for (int t : band.active_tets)
    for (int v : mesh.tets[t]) space.vertex_to_dof[v] = 0;
  for (std::size_t v = 0; v < space.vertex_to_dof.size(); ++v)
    if (space.vertex_to_dof[v] >= 0)
      space.active_vertices.push_back(static_cast<int>(v));
  for (std::size_t d = 0; d < space.active_vertices.size(); ++d)
    space.vertex_to_dof[space.active_vertices[d]] = static_cast<int>(d);

  return space;
}

BasisEval eval_basis(const BackgroundMesh& mesh, int tet, const Vec3& point) {
  std::array<Vec3, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = mesh.vertex(tet, i);
  const auto lam = barycentric_coords(v, point);
  for (double l : lam)
    if (l < -1e-10 || l > 1.0 + 1e-10)
      throw std::domain_error("eval_basis: point outside tet");
  return {lam, p1_gradients(v)};
}

std::vector<double> interpolate_nodal(
    const std::function<double(const Vec3&)>& f, const TraceSpace& space) {
  std::vector<double> coeffs(space.n_pressure_dofs());
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    coeffs[d] = f(space.mesh->vertices[space.active_vertices[d]]);
  return coeffs;
}

std::vector<double> interpolate_nodal(
    const std::function<Vec3(const Vec3&)>& f, const TraceSpace& space) {
  std::vector<double> coeffs(space.n_velocity_dofs());
  for (int d = 0; d < space.n_pressure_dofs(); ++d) {
    const Vec3 val = f(space.mesh->vertices[space.active_vertices[d]]);
    for (int c = 0; c < 3; ++c) coeffs[3 * d + c] = val[c];
  }
  return coeffs;
}

}  // namespace tracefem
