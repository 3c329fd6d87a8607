#pragma once

#include <memory>

#include "tracefem/assembly.hpp"
#include "tracefem/krylov.hpp"

namespace tracefem {

/// Everything geometric that one solve needs, bundled so the internal
/// pointers (space -> mesh/band) stay valid.  Create through discretize().
struct Discretization {
  LevelSetField field;
  BackgroundMesh mesh;
  P1LevelSet level_set;
  CutSurface surface;
  NarrowBand band;
  TraceSpace space;
  NormalMode normal_mode = NormalMode::p2_interpolant;

  double h() const { return mesh.h; }
  NormalField normals() const { return {field, mesh, normal_mode}; }
};

std::unique_ptr<Discretization> discretize(
    const LevelSetField& field, int level, const Box& box,
    NormalMode mode = NormalMode::p2_interpolant);

struct SteadySolveResult {
  std::vector<double> u;
  std::vector<double> p;
  KrylovReport minres;
  double avg_inner_A = 0.0;
  double avg_inner_S = 0.0;
};

struct SolverOptions {
  double tol = 1e-8;
  int max_iters = 300;
  PrecondModeA mode_A = PrecondModeA::inner_cg;
  PrecondModeS mode_S = PrecondModeS::SQ_inner_cg;
};

/// Runs preconditioned MINRES on an assembled system.
SteadySolveResult solve_steady(const SaddleSystem& system,
                               const SolverOptions& opts = {});

/// Reference problem on the unit sphere: exact solution plus matching data.
struct SphereManufactured {
  std::function<Vec3(const Vec3&)> velocity;
  std::function<Mat3(const Vec3&)> velocity_gradient;
  std::function<double(const Vec3&)> pressure;
  std::function<Vec3(const Vec3&)> forcing;     // includes the alpha*u term
  std::function<double(const Vec3&)> divergence;
};

SphereManufactured sphere_manufactured_data(double alpha);

/// Tangential rotation mix on the unit sphere built from low-order zonal and
/// sectoral harmonics; its symmetric surface gradient is small but nonzero,
/// so it decays slowly under the surface Stokes flow.
Vec3 killing_initial_velocity(const Vec3& x);

/// Smooth source/sink pair for the continuity equation on the genus-3
/// surface; width and amplitude scale with the mesh size h.
double source_sink_g(const Vec3& x, double h);

struct TimeStepRecord {
  int step = 0;
  double time = 0.0;
  double energy = 0.0;
  int minres_iters = 0;
  bool converged = false;
};

struct TimeSeries {
  std::vector<TimeStepRecord> steps;
  std::vector<double> u_final;
  std::vector<double> p_final;
};

struct TimeStepOptions {
  double dt = 0.1;
  int n_steps = 10;
  SolverOptions solver;
};

/// Backward Euler for the unforced surface Stokes flow: each step solves the
/// generalized problem with alpha = 1/dt and momentum load (1/dt) u_prev.
/// The continuity data g is optional (source/sink runs) and held fixed in
/// time.  The operator is assembled once and reused across steps.
TimeSeries backward_euler_run(const Discretization& d, const FormParams& base,
                              std::vector<double> u0,
                              const TimeStepOptions& opts,
                              const std::function<double(const Vec3&)>& g = {});

}  // namespace tracefem
