#include "tracefem/assembly.hpp"

#include <array>

#include "tracefem/p1.hpp"
#include "tracefem/quadrature.hpp"

namespace tracefem {

namespace {

struct TetContext {
  std::array<Vec3, 4> verts;
  std::array<Vec3, 4> grads;
  std::array<int, 4> dofs;  // scalar dofs of the tet's vertices

  TetContext(const TraceSpace& space, int tet) {
    const auto& mesh = *space.mesh;
    for (int i = 0; i < 4; ++i) {
      verts[i] = mesh.vertex(tet, i);
      dofs[i] = space.dof(mesh.tets[tet][i]);
    }
    grads = p1_gradients(verts);
  }

  std::array<double, 4> basis_at(const Vec3& p) const {
    return barycentric_coords(verts, p);
  }
};

// E_s of the basis field phi_i * e_a at one quadrature point:
// 0.5 * P (g e_a^T + e_a g^T) P, with g = grad(phi_i).
Mat3 strain_of_basis(const Mat3& proj, const Vec3& g, int a) {
  Vec3 pg = proj * g;
  Vec3 pa{proj(0, a), proj(1, a), proj(2, a)};  // P e_a
  Mat3 e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      e(r, c) = 0.5 * (pg[r] * pa[c] + pa[r] * pg[c]);
  return e;
}

}  // namespace

void SaddleSystem::apply_block(std::span<const double> x,
                               std::span<double> y) const {
  const int nu = n();
  const int np = m();
  auto xu = x.subspan(0, nu);
  auto xp = x.subspan(nu, np);
  auto yu = y.subspan(0, nu);
  auto yp = y.subspan(nu, np);

  A.multiply(xu, yu);
  // y_u += B^T x_p (row-wise scatter of B)
  const auto off = B.row_offsets();
  const auto cols = B.col_indices();
  const auto vals = B.values();
  for (int r = 0; r < np; ++r)
    for (int k = off[r]; k < off[r + 1]; ++k) yu[cols[k]] += vals[k] * xp[r];

  B.multiply(xu, yp);
  std::vector<double> cp = C.multiply(xp);
  for (int r = 0; r < np; ++r) yp[r] -= cp[r];
}

SparseMatrix assemble_velocity_form(const TraceSpace& space,
                                    const CutSurface& surface,
                                    const NarrowBand& band,
                                    const FormParams& params,
                                    const NormalField& normals,
                                    const QuadDegrees& quad) {
  const int n = space.n_velocity_dofs();
  std::vector<Triplet> triplets;

  // surface part: E_s:E_s + alpha (Pu).(Pv) + tau (n.u)(n.v)
  for (const auto& tri : surface.triangles) {
    const TetContext ctx(space, tri.parent_tet);
    const auto rule = surface_quadrature(tri.points, quad.surface);
    double local[12][12] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Vec3& x = rule.points[q];
      const double w = rule.weights[q];
      const Vec3 nrm = normals(tri.parent_tet, x);
      const Mat3 proj = tangential_projector(nrm);
      const auto phi = ctx.basis_at(x);

      Mat3 strain[12];
      Vec3 pphi[12];  // P e_a * phi_i
      double nphi[12];
      for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 3; ++a) {
          const int k = 3 * i + a;
          strain[k] = strain_of_basis(proj, ctx.grads[i], a);
          pphi[k] = phi[i] * Vec3{proj(0, a), proj(1, a), proj(2, a)};
          nphi[k] = phi[i] * nrm[a];
        }
      for (int k = 0; k < 12; ++k)
        for (int l = k; l < 12; ++l) {
          const double val =
              w * (frobenius_dot(strain[k], strain[l]) +
                   params.alpha * dot(pphi[k], pphi[l]) +
                   params.tau * nphi[k] * nphi[l]);
          local[k][l] += val;
          if (l != k) local[l][k] += val;
        }
    }
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 3; ++a)
        for (int j = 0; j < 4; ++j)
          for (int b = 0; b < 3; ++b)
            triplets.push_back({3 * ctx.dofs[i] + a, 3 * ctx.dofs[j] + b,
                                local[3 * i + a][3 * j + b]});
  }

  // band part: rho_u (grad u n).(grad v n); for P1 this couples only equal
  // components, with value (g_i.n)(g_j.n)
  for (int t : band.active_tets) {
    const TetContext ctx(space, t);
    const auto rule = volume_quadrature(ctx.verts, quad.volume);
    double local[4][4] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Vec3 nrm = normals(t, rule.points[q]);
      double gn[4];
      for (int i = 0; i < 4; ++i) gn[i] = dot(ctx.grads[i], nrm);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          const double val = rule.weights[q] * params.rho_u * gn[i] * gn[j];
          local[i][j] += val;
          if (j != i) local[j][i] += val;
        }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int a = 0; a < 3; ++a)
          triplets.push_back(
              {3 * ctx.dofs[i] + a, 3 * ctx.dofs[j] + a, local[i][j]});
  }

  return SparseMatrix::from_triplets(n, n, std::move(triplets));
}

SparseMatrix assemble_divergence_form(const TraceSpace& space,
                                      const CutSurface& surface,
                                      const NormalField& /*normals*/,
                                      const QuadDegrees& quad) {
  const int n = space.n_velocity_dofs();
  const int m = space.n_pressure_dofs();
  std::vector<Triplet> triplets;

  // B[q, (i,a)] = int (P grad psi_q)_a phi_i ds.  The projector uses the
  // facet normal, so P grad psi_q is the intrinsic in-plane gradient of the
  // pressure trace on each cut triangle.  This keeps the pairing exactly
  // compatible with integration by parts on the closed piecewise-planar
  // surface, which in turn keeps the discrete divergence of rigid rotations
  // (and the resulting spurious pressure dissipation) at the geometric
  // consistency order rather than one order lower.
  for (const auto& tri : surface.triangles) {
    const TetContext ctx(space, tri.parent_tet);
    const auto rule = surface_quadrature(tri.points, quad.surface);
    const Mat3 proj = tangential_projector(tri.normal);
    double local[4][12] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Vec3& x = rule.points[q];
      const double w = rule.weights[q];
      const auto phi = ctx.basis_at(x);
      for (int j = 0; j < 4; ++j) {
        const Vec3 pg = proj * ctx.grads[j];
        for (int i = 0; i < 4; ++i)
          for (int a = 0; a < 3; ++a)
            local[j][3 * i + a] += w * pg[a] * phi[i];
      }
    }
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 3; ++a)
          triplets.push_back(
              {ctx.dofs[j], 3 * ctx.dofs[i] + a, local[j][3 * i + a]});
  }

  return SparseMatrix::from_triplets(m, n, std::move(triplets));
}

SparseMatrix assemble_pressure_stab(const TraceSpace& space,
                                    const NarrowBand& band,
                                    const FormParams& params,
                                    const QuadDegrees& quad) {
  const int m = space.n_pressure_dofs();
  std::vector<Triplet> triplets;
  for (int t : band.active_tets) {
    const TetContext ctx(space, t);
    const double vol = std::abs(tet_signed_volume(
        ctx.verts[0], ctx.verts[1], ctx.verts[2], ctx.verts[3]));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        triplets.push_back({ctx.dofs[i], ctx.dofs[j],
                            params.rho_p * vol * dot(ctx.grads[i], ctx.grads[j])});
  }
  (void)quad;  // gradients are constant per tet; the integral is exact
  return SparseMatrix::from_triplets(m, m, std::move(triplets));
}

AuxMatrices assemble_mass_and_schur(const TraceSpace& space,
                                    const CutSurface& surface,
                                    const NarrowBand& band,
                                    const FormParams& params,
                                    const QuadDegrees& quad) {
  (void)params;
  const int n = space.n_velocity_dofs();
  const int m = space.n_pressure_dofs();
  const double h = space.mesh->h;
  std::vector<Triplet> tu, tp, tq, ts;

  for (int t : band.active_tets) {
    const TetContext ctx(space, t);
    const auto rule = volume_quadrature(ctx.verts, quad.volume);
    const double vol = std::abs(tet_signed_volume(
        ctx.verts[0], ctx.verts[1], ctx.verts[2], ctx.verts[3]));
    double mass[4][4] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const auto phi = ctx.basis_at(rule.points[q]);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          const double v = rule.weights[q] * phi[i] * phi[j];
          mass[i][j] += v;
          if (j > i) mass[j][i] += v;
        }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        tp.push_back({ctx.dofs[i], ctx.dofs[j], mass[i][j]});
        tq.push_back({ctx.dofs[i], ctx.dofs[j],
                      h * vol * dot(ctx.grads[i], ctx.grads[j])});
        for (int a = 0; a < 3; ++a)
          tu.push_back({3 * ctx.dofs[i] + a, 3 * ctx.dofs[j] + a, mass[i][j]});
      }
  }

  for (const auto& tri : surface.triangles) {
    const TetContext ctx(space, tri.parent_tet);
    const auto rule = surface_quadrature(tri.points, quad.surface);
    double mass[4][4] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const auto phi = ctx.basis_at(rule.points[q]);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          const double v = rule.weights[q] * phi[i] * phi[j];
          mass[i][j] += v;
          if (j > i) mass[j][i] += v;
        }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        ts.push_back({ctx.dofs[i], ctx.dofs[j], mass[i][j]});
        tq.push_back({ctx.dofs[i], ctx.dofs[j], mass[i][j]});
      }
  }

  AuxMatrices aux;
  aux.M_u = SparseMatrix::from_triplets(n, n, std::move(tu));
  aux.M_p = SparseMatrix::from_triplets(m, m, std::move(tp));
  aux.S_Q = SparseMatrix::from_triplets(m, m, std::move(tq));
  aux.Ms_p = SparseMatrix::from_triplets(m, m, std::move(ts));
  return aux;
}

std::pair<std::vector<double>, std::vector<double>> assemble_rhs(
    const TraceSpace& space, const CutSurface& surface,
    const SurfaceVectorFn& f, const SurfaceScalarFn& g,
    const QuadDegrees& quad) {
  std::vector<double> rhs_u(space.n_velocity_dofs(), 0.0);
  std::vector<double> rhs_p(space.n_pressure_dofs(), 0.0);

  for (const auto& tri : surface.triangles) {
    const TetContext ctx(space, tri.parent_tet);
    const auto rule = surface_quadrature(tri.points, quad.surface);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Vec3& x = rule.points[q];
      const double w = rule.weights[q];
      const Vec3 fv = f(tri, x);
      const double gv = g(tri, x);
      const auto phi = ctx.basis_at(x);
      for (int i = 0; i < 4; ++i) {
        for (int a = 0; a < 3; ++a)
          rhs_u[3 * ctx.dofs[i] + a] += w * fv[a] * phi[i];
        // the pressure test row pairs tangential gradients of q against u,
        // so integrating the mass source by parts flips its sign
        rhs_p[ctx.dofs[i]] -= w * gv * phi[i];
      }
    }
  }
  return {std::move(rhs_u), std::move(rhs_p)};
}

std::pair<std::vector<double>, std::vector<double>> assemble_rhs(
    const TraceSpace& space, const CutSurface& surface,
    const std::function<Vec3(const Vec3&)>& f,
    const std::function<double(const Vec3&)>& g, const QuadDegrees& quad) {
  return assemble_rhs(
      space, surface,
      [&f](const SurfaceTriangle&, const Vec3& x) { return f(x); },
      [&g](const SurfaceTriangle&, const Vec3& x) { return g(x); }, quad);
}

SaddleSystem assemble_system(const TraceSpace& space, const CutSurface& surface,
                             const NarrowBand& band, const FormParams& params,
                             const NormalField& normals,
                             const SurfaceVectorFn& f, const SurfaceScalarFn& g,
                             const QuadDegrees& quad) {
  SaddleSystem sys;
  sys.A = assemble_velocity_form(space, surface, band, params, normals, quad);
  sys.B = assemble_divergence_form(space, surface, normals, quad);
  sys.C = assemble_pressure_stab(space, band, params, quad);
  auto aux = assemble_mass_and_schur(space, surface, band, params, quad);
  sys.M_u = std::move(aux.M_u);
  sys.M_p = std::move(aux.M_p);
  sys.S_Q = std::move(aux.S_Q);
  sys.Ms_p = std::move(aux.Ms_p);
  auto [ru, rp] = assemble_rhs(space, surface, f, g, quad);
  sys.rhs_u = std::move(ru);
  sys.rhs_p = std::move(rp);
  return sys;
}

Vec3 eval_velocity(const TraceSpace& space, std::span<const double> u, int tet,
                   const Vec3& point) {
  const TetContext ctx(space, tet);
  const auto phi = ctx.basis_at(point);
  Vec3 val{0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 3; ++a)
      val[a] += phi[i] * u[3 * ctx.dofs[i] + a];
  return val;
}

double eval_pressure(const TraceSpace& space, std::span<const double> p,
                     int tet, const Vec3& point) {
  const TetContext ctx(space, tet);
  const auto phi = ctx.basis_at(point);
  double val = 0.0;
  for (int i = 0; i < 4; ++i) val += phi[i] * p[ctx.dofs[i]];
  return val;
}

Mat3 velocity_gradient(const TraceSpace& space, std::span<const double> u,
                       int tet) {
  const TetContext ctx(space, tet);
  Mat3 jac;
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c)
        jac(a, c) += u[3 * ctx.dofs[i] + a] * ctx.grads[i][c];
  return jac;
}

}  // namespace tracefem
