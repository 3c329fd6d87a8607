#pragma once

#include <array>
#include <vector>

#include "tracefem/level_set.hpp"

namespace tracefem {

struct SurfaceTriangle {
  std::array<Vec3, 3> points;
  int parent_tet = -1;
  Vec3 normal;  // unit, oriented towards increasing level-set values
  double area = 0.0;
};

/// Piecewise planar zero level of a P1 level set, with parent-tet links.
struct CutSurface {
  std::vector<SurfaceTriangle> triangles;

  double total_area() const {
    double a = 0.0;
    for (const auto& t : triangles) a += t.area;
    return a;
  }
};

/// Background tets whose nodal level-set values change sign, sorted by index.
struct NarrowBand {
  std::vector<int> active_tets;
};

/// Runs marching tetrahedra on the sign-changing tets.  Edge cut points are
/// computed once per global mesh edge with canonical endpoint order, so
/// triangles of neighboring tets share bitwise-identical vertices.  Throws
/// std::runtime_error when the surface does not intersect the mesh.
std::pair<CutSurface, NarrowBand> extract_cut_surface(const P1LevelSet& ls);

/// Zero set of the P1 interpolant within a single tet given its nodal values;
/// returns 0, 1, or 2 triangles.  Exposed for exhaustiveness tests.
int marching_tet(const std::array<Vec3, 4>& verts,
                 const std::array<double, 4>& values,
                 std::array<SurfaceTriangle, 2>& out);

enum class NormalMode { p2_interpolant, analytic };

/// Unit normal at a point of an active tet, either the normalized analytic
/// gradient or the normalized gradient of the per-tet quadratic interpolant of
/// the level-set field over the tet's 4 vertices and 6 edge midpoints.
Vec3 discrete_normal(const LevelSetField& field, const BackgroundMesh& mesh,
                     int tet, const Vec3& point, NormalMode mode);

/// Normal evaluator bound to one field/mesh/mode triple.
class NormalField {
 public:
  NormalField(const LevelSetField& field, const BackgroundMesh& mesh,
              NormalMode mode)
      : field_(&field), mesh_(&mesh), mode_(mode) {}

  Vec3 operator()(int tet, const Vec3& point) const {
    return discrete_normal(*field_, *mesh_, tet, point, mode_);
  }
  NormalMode mode() const { return mode_; }

 private:
  const LevelSetField* field_;
  const BackgroundMesh* mesh_;
  NormalMode mode_;
};

}  // namespace tracefem
