#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tracefem/geometry.hpp"

namespace tracefem {

/// Structured tetrahedral triangulation of an axis-aligned box.
///
/// The box is split into n x n x n sub-cubes with n = 2^(level+1); each cube
/// is split into 6 tetrahedra by the Kuhn/Freudenthal pattern, which makes all
/// face diagonals agree between neighboring cubes, so the triangulation is
/// conforming.  Vertices are numbered lexicographically in (i,j,k) with i
/// fastest.  All tetrahedra have positive signed volume under the stored
/// vertex order.
struct BackgroundMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 4>> tets;
  int level = 0;
  int cells_per_side = 0;
  double h = 0.0;  // box side / cells_per_side
  Box box;

  const Vec3& vertex(int tet, int local) const {
    return vertices[tets[tet][local]];
  }
  double tet_volume(int tet) const {
    const auto& t = tets[tet];
    return tet_signed_volume(vertices[t[0]], vertices[t[1]], vertices[t[2]],
                             vertices[t[3]]);
  }
};

/// Side length of a cell at the given refinement level: side / 2^(level+1).
double mesh_size(int level, const Box& box);

/// Builds the Kuhn-subdivided cube mesh.  Throws std::invalid_argument for a
/// negative level or a degenerate box and std::length_error when the vertex
/// count would overflow.
BackgroundMesh build_cube_mesh(int level, const Box& box);

}  // namespace tracefem
