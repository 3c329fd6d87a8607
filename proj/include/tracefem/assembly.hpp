#pragma once

#include <functional>

#include "tracefem/cut_surface.hpp"
#include "tracefem/sparse.hpp"
#include "tracefem/trace_space.hpp"

namespace tracefem {

/// Scalings of the discrete forms.  tau, rho_u, rho_p follow the mesh-size
/// laws tau = c_tau/h^2, rho_u = c_u*h, rho_p = c_p*h.
struct FormParams {
  double alpha = 0.0;
  double c_tau = 1.0;
  double c_u = 1.0;
  double c_p = 1.0;
  double tau = 0.0;
  double rho_u = 0.0;
  double rho_p = 0.0;

  static FormParams from_constants(double h, double alpha, double c_tau = 1.0,
                                   double c_u = 1.0, double c_p = 1.0) {
    FormParams p;
    p.alpha = alpha;
    p.c_tau = c_tau;
    p.c_u = c_u;
    p.c_p = c_p;
    p.tau = c_tau / (h * h);
    p.rho_u = c_u * h;
    p.rho_p = c_p * h;
    return p;
  }
};

/// Quadrature degrees used by all assembly loops.
struct QuadDegrees {
  int surface = 4;  // on cut triangles
  int volume = 2;   // in band tets
};

/// Assembled blocks of the saddle-point system
///   [ A  B^T ] [u]   [rhs_u]
///   [ B  -C  ] [p] = [rhs_p]
/// plus auxiliary matrices for preconditioning and norms.
struct SaddleSystem {
  SparseMatrix A;     // n x n, symmetric
  SparseMatrix B;     // m x n
  SparseMatrix C;     // m x m, symmetric PSD
  SparseMatrix M_u;   // band velocity mass
  SparseMatrix M_p;   // band pressure mass
  SparseMatrix S_Q;   // surface pressure mass + h * band stiffness
  SparseMatrix Ms_p;  // surface pressure mass only
  std::vector<double> rhs_u;
  std::vector<double> rhs_p;

  int n() const { return A.rows(); }
  int m() const { return C.rows(); }

  /// y = [[A,B^T],[B,-C]] x for the stacked vector x = (u, p).
  void apply_block(std::span<const double> x, std::span<double> y) const;
};

SparseMatrix assemble_velocity_form(const TraceSpace& space,
                                    const CutSurface& surface,
                                    const NarrowBand& band,
                                    const FormParams& params,
                                    const NormalField& normals,
                                    const QuadDegrees& quad = {});

SparseMatrix assemble_divergence_form(const TraceSpace& space,
                                      const CutSurface& surface,
                                      const NormalField& normals,
                                      const QuadDegrees& quad = {});

SparseMatrix assemble_pressure_stab(const TraceSpace& space,
                                    const NarrowBand& band,
                                    const FormParams& params,
                                    const QuadDegrees& quad = {});

struct AuxMatrices {
  SparseMatrix M_u;
  SparseMatrix M_p;
  SparseMatrix S_Q;
  SparseMatrix Ms_p;
};

AuxMatrices assemble_mass_and_schur(const TraceSpace& space,
                                    const CutSurface& surface,
                                    const NarrowBand& band,
                                    const FormParams& params,
                                    const QuadDegrees& quad = {});

/// Surface loads; the callables see the triangle being integrated, so
/// finite element fields can be evaluated through their parent tet.
using SurfaceVectorFn = std::function<Vec3(const SurfaceTriangle&, const Vec3&)>;
using SurfaceScalarFn = std::function<double(const SurfaceTriangle&, const Vec3&)>;

std::pair<std::vector<double>, std::vector<double>> assemble_rhs(
    const TraceSpace& space, const CutSurface& surface,
    const SurfaceVectorFn& f, const SurfaceScalarFn& g,
    const QuadDegrees& quad = {});

/// Convenience overload for plain point functions.
std::pair<std::vector<double>, std::vector<double>> assemble_rhs(
    const TraceSpace& space, const CutSurface& surface,
    const std::function<Vec3(const Vec3&)>& f,
    const std::function<double(const Vec3&)>& g, const QuadDegrees& quad = {});

/// Full system with rhs; the one-stop entry used by the drivers.
SaddleSystem assemble_system(const TraceSpace& space, const CutSurface& surface,
                             const NarrowBand& band, const FormParams& params,
                             const NormalField& normals,
                             const SurfaceVectorFn& f, const SurfaceScalarFn& g,
                             const QuadDegrees& quad = {});

/// Evaluates the P1 velocity field at a point of a parent tet.
Vec3 eval_velocity(const TraceSpace& space, std::span<const double> u, int tet,
                   const Vec3& point);
/// Evaluates the P1 pressure field at a point of a parent tet.
double eval_pressure(const TraceSpace& space, std::span<const double> p,
                     int tet, const Vec3& point);
/// Constant Jacobian (rows = component gradients) of the velocity on a tet.
Mat3 velocity_gradient(const TraceSpace& space, std::span<const double> u,
                       int tet);

}  // namespace tracefem
