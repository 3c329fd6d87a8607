#include "tracefem/background_mesh.hpp"

#include <cstdint>
#include <stdexcept>

namespace tracefem {

namespace {

// The six Kuhn tetrahedra of the unit cube: paths from corner (0,0,0) to
// (1,1,1) adding one axis at a time, one tet per permutation of the axes.
constexpr int kAxisPerm[6][3] = {
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

bool perm_is_even(const int* p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

double mesh_size(int level, const Box& box) {
  if (level < 0) throw std::invalid_argument("mesh_size: level must be >= 0");
  const int n = 1 << (level + 1);
  return box.side(0) / n;
}

BackgroundMesh build_cube_mesh(int level, const Box& box) {
  if (level < 0)
    throw std::invalid_argument("build_cube_mesh: level must be >= 0");
  for (int a = 0; a < 3; ++a)
    if (!(box.side(a) > 0.0))
      throw std::invalid_argument("build_cube_mesh: degenerate box");

  if (level > 20)
    throw std::length_error("build_cube_mesh: vertex count exceeds capacity");
  const std::int64_t n = std::int64_t{1} << (level + 1);
  const std::int64_t nv = (n + 1) * (n + 1) * (n + 1);
  if (nv > std::int64_t{1} << 31)
    throw std::length_error("build_cube_mesh: vertex count exceeds capacity");

  BackgroundMesh mesh;
  mesh.level = level;
  mesh.cells_per_side = static_cast<int>(n);
  mesh.h = box.side(0) / static_cast<double>(n);
  mesh.box = box;

  mesh.vertices.reserve(static_cast<std::size_t>(nv));
  for (std::int64_t k = 0; k <= n; ++k)
    for (std::int64_t j = 0; j <= n; ++j)
      for (std::int64_t i = 0; i <= n; ++i)
        mesh.vertices.push_back({box.lo[0] + box.side(0) * i / n,
                                 box.lo[1] + box.side(1) * j / n,
                                 box.lo[2] + box.side(2) * k / n});

  auto vid = [n](std::int64_t i, std::int64_t j, std::int64_t k) {
    return static_cast<int>(i + (n + 1) * (j + (n + 1) * k));
  };

  mesh.tets.reserve(static_cast<std::size_t>(6 * n * n * n));
  for (std::int64_t k = 0; k < n; ++k)
    for (std::int64_t j = 0; j < n; ++j)
      for (std::int64_t i = 0; i < n; ++i)
        for (const int* perm : kAxisPerm) {
          std::int64_t c[3] = {i, j, k};
          std::array<int, 4> tet;
          tet[0] = vid(c[0], c[1], c[2]);
          for (int s = 0; s < 3; ++s) {
            c[perm[s]] += 1;
            tet[s + 1] = vid(c[0], c[1], c[2]);
          }
          // odd permutations give negatively oriented tets; swap to fix
          if (!perm_is_even(perm)) std::swap(tet[2], tet[3]);
          mesh.tets.push_back(tet);
        }

  return mesh;
}

}  // namespace tracefem
