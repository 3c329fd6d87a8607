#include "tracefem/cut_surface.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "tracefem/p1.hpp"

namespace tracefem {

namespace {

Vec3 edge_cut(const Vec3& a, const Vec3& b, double va, double vb) {
  const double t = va / (va - vb);
  return a + t * (b - a);
}

void orient_and_push(std::array<Vec3, 3> pts, const Vec3& grad, int parent,
                     std::array<SurfaceTriangle, 2>& out, int& count) {
  Vec3 n = cross(pts[1] - pts[0], pts[2] - pts[0]);
  const double len = norm(n);
  if (dot(n, grad) < 0.0) {
    std::swap(pts[1], pts[2]);
    n = -n;
  }
  SurfaceTriangle tri;
  tri.points = pts;
  tri.parent_tet = parent;
  tri.area = 0.5 * len;
  tri.normal = len > 0.0 ? (1.0 / len) * n : normalized(grad);
  out[count++] = tri;
}

// Cut-point provider: local (per call) or shared across tets through a map
// keyed by the global mesh edge, so neighbors get bitwise-identical points.
struct TetCut {
  std::array<Vec3, 4> verts;
  std::array<double, 4> values;
  int parent = -1;

  template <typename CutPoint>
  int run(CutPoint cut_point, std::array<SurfaceTriangle, 2>& out) const {
    int neg[4], pos[4], nn = 0, np = 0;
    for (int i = 0; i < 4; ++i)
      (values[i] < 0.0 ? neg[nn++] : pos[np++]) = i;
    if (nn == 0 || np == 0) return 0;

    const auto grads = p1_gradients(verts);
    Vec3 grad{0, 0, 0};
    for (int i = 0; i < 4; ++i) grad += values[i] * grads[i];

    int count = 0;
    if (nn == 1 || np == 1) {
      const int apex = (nn == 1) ? neg[0] : pos[0];
      const int* others = (nn == 1) ? pos : neg;
      std::array<Vec3, 3> pts;
      for (int k = 0; k < 3; ++k) pts[k] = cut_point(apex, others[k]);
      orient_and_push(pts, grad, parent, out, count);
    } else {
      // quad case: cyclic order m0-p0, m0-p1, m1-p1, m1-p0
      const std::array<Vec3, 4> q = {
          cut_point(neg[0], pos[0]), cut_point(neg[0], pos[1]),
          cut_point(neg[1], pos[1]), cut_point(neg[1], pos[0])};
      const double d02 = norm(q[0] - q[2]);
      const double d13 = norm(q[1] - q[3]);
      if (d02 <= d13) {
        orient_and_push({q[0], q[1], q[2]}, grad, parent, out, count);
        orient_and_push({q[0], q[2], q[3]}, grad, parent, out, count);
      } else {
        orient_and_push({q[1], q[2], q[3]}, grad, parent, out, count);
        orient_and_push({q[1], q[3], q[0]}, grad, parent, out, count);
      }
    }
    return count;
  }
};

}  // namespace

int marching_tet(const std::array<Vec3, 4>& verts,
                 const std::array<double, 4>& values,
                 std::array<SurfaceTriangle, 2>& out) {
  TetCut tc{verts, values, -1};
  auto cut = [&](int a, int b) {
    if (a > b) std::swap(a, b);  // canonical endpoint order
    return edge_cut(verts[a], verts[b], values[a], values[b]);
  };
  return tc.run(cut, out);
}

std::pair<CutSurface, NarrowBand> extract_cut_surface(const P1LevelSet& ls) {
  const BackgroundMesh& mesh = *ls.mesh;
  CutSurface surface;
  NarrowBand band;
  std::unordered_map<std::uint64_t, Vec3> edge_points;

  for (std::size_t t = 0; t < mesh.tets.size(); ++t) {
    const auto& tet = mesh.tets[t];
    TetCut tc;
    tc.parent = static_cast<int>(t);
    for (int i = 0; i < 4; ++i) {
      tc.verts[i] = mesh.vertices[tet[i]];
      tc.values[i] = ls.nodal_values[tet[i]];
    }
    auto cut = [&](int a, int b) -> Vec3 {
      int ga = tet[a], gb = tet[b];
      if (ga > gb) std::swap(ga, gb);
      const std::uint64_t key =
          (static_cast<std::uint64_t>(ga) << 32) | static_cast<std::uint32_t>(gb);
      auto it = edge_points.find(key);
      if (it != edge_points.end()) return it->second;
      const Vec3 p = edge_cut(mesh.vertices[ga], mesh.vertices[gb],
                              ls.nodal_values[ga], ls.nodal_values[gb]);
      edge_points.emplace(key, p);
      return p;
    };
    std::array<SurfaceTriangle, 2> tris;
    const int count = tc.run(cut, tris);
    if (count > 0) {
      band.active_tets.push_back(static_cast<int>(t));
      for (int k = 0; k < count; ++k) surface.triangles.push_back(tris[k]);
    }
  }

  if (surface.triangles.empty())
    throw std::runtime_error(
        "extract_cut_surface: level set does not intersect the mesh");
  return {std::move(surface), std::move(band)};
}

Vec3 discrete_normal(const LevelSetField& field, const BackgroundMesh& mesh,
                     int tet, const Vec3& point, NormalMode mode) {
  Vec3 g;
  if (mode == NormalMode::analytic) {
    g = field.grad_phi(point);
  } else {
    // Gradient of the quadratic nodal interpolant over the tet's 4 vertices
    // and 6 edge midpoints.  With the nodal P2 basis the coefficients are the
    // sampled values themselves.
    std::array<Vec3, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = mesh.vertex(tet, i);
    const auto gl = p1_gradients(v);
    const auto lam = barycentric_coords(v, point);

    g = {0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      const double phi_i = field.phi(v[i]);
      // vertex basis: lam_i (2 lam_i - 1), gradient (4 lam_i - 1) grad(lam_i)
      g += phi_i * (4.0 * lam[i] - 1.0) * gl[i];
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const double phi_m = field.phi(0.5 * (v[i] + v[j]));
        // edge basis: 4 lam_i lam_j
        g += phi_m * 4.0 * (lam[j] * gl[i] + lam[i] * gl[j]);
      }
  }
  const double len = norm(g);
  if (!(len > 0.0))
    throw std::runtime_error("discrete_normal: degenerate (zero) gradient");
  return (1.0 / len) * g;
}

}  // namespace tracefem
