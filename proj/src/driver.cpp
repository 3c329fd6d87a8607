#include "tracefem/driver.hpp"

#include <cmath>

#include "tracefem/analysis.hpp"
#include "tracefem/manufactured.hpp"

namespace tracefem {

std::unique_ptr<Discretization> discretize(const LevelSetField& field,
                                           int level, const Box& box,
                                           NormalMode mode) {
  auto d = std::make_unique<Discretization>();
  d->field = field;
  d->mesh = build_cube_mesh(level, box);
  d->level_set = interpolate_p1(d->field, d->mesh);
  auto [surface, band] = extract_cut_surface(d->level_set);
  d->surface = std::move(surface);
  d->band = std::move(band);
  d->space = build_space(d->band, d->mesh);
  d->normal_mode = mode;
  return d;
}

SteadySolveResult solve_steady(const SaddleSystem& system,
                               const SolverOptions& opts) {
  const BlockPreconditioner pc =
      make_block_preconditioner(system, opts.mode_A, opts.mode_S);
  auto [u, p, report] = minres_solve(system, pc, opts.tol, opts.max_iters);

  SteadySolveResult result;
  result.u = std::move(u);
  result.p = std::move(p);
  result.minres = std::move(report);
  result.avg_inner_A = pc.stats_A->average();
  result.avg_inner_S = pc.stats_S->average();
  return result;
}

SphereManufactured sphere_manufactured_data(double alpha) {
  SphereManufactured d;
  d.velocity = manufactured_velocity;
  d.velocity_gradient = manufactured_velocity_gradient;
  d.pressure = manufactured_pressure;
  d.forcing = [alpha](const Vec3& x) {
    return manufactured_forcing_alpha0(x) + alpha * manufactured_velocity(x);
  };
  d.divergence = manufactured_divergence;
  return d;
}

Vec3 killing_initial_velocity(const Vec3& x) {
  // n x grad of a sum of zonal harmonics: degree 1 about the z and y axes
  // plus degrees 2 and 3 about z.  Only the degree-1 terms carry angular
  // momentum, so the flow relaxes towards a rigid rotation about e2 + e3.
  const double z = x[2];
  const Vec3 grad_psi{0.0, 1.0, 1.0 + 3.0 * z + 0.5 * (15.0 * z * z - 3.0)};
  return (1.0 / norm(x)) * cross(x, grad_psi);
}

double source_sink_g(const Vec3& x, double h) {
  const double zc = std::sqrt((7.0 + std::sqrt(19.0)) / 3.0);
  const Vec3 a{-1.0, 1.0, zc};
  const Vec3 b{1.0, -1.0, -zc};
  const Vec3 da = x - a;
  const Vec3 db = x - b;
  const double h2 = h * h;
  return (std::exp(-dot(da, da) / h2) - std::exp(-dot(db, db) / h2)) / h2;
}

TimeSeries backward_euler_run(const Discretization& d, const FormParams& base,
                              std::vector<double> u0,
                              const TimeStepOptions& opts,
                              const std::function<double(const Vec3&)>& g) {
  const double dt = opts.dt;
  const FormParams params = FormParams::from_constants(
      d.h(), 1.0 / dt, base.c_tau, base.c_u, base.c_p);
  const NormalField normals = d.normals();

  const SurfaceScalarFn g_fn = g
      ? SurfaceScalarFn([&g](const SurfaceTriangle&, const Vec3& x) { return g(x); })
      : SurfaceScalarFn([](const SurfaceTriangle&, const Vec3&) { return 0.0; });

  std::vector<double> u = std::move(u0);
  // only the tangential part of the old velocity drives the new step; the
  // normal part is an artifact kept small by the penalty, and feeding it
  // back would amplify it whenever 1/dt exceeds tau
  const auto step_forcing = [&](const SurfaceTriangle& tri, const Vec3& x) {
    const Vec3 up = eval_velocity(d.space, u, tri.parent_tet, x);
    const Vec3 n = normals(tri.parent_tet, x);
    return (1.0 / dt) * (up - dot(n, up) * n);
  };
  SaddleSystem system = assemble_system(
      d.space, d.surface, d.band, params, normals, step_forcing, g_fn);
  const BlockPreconditioner pc = make_block_preconditioner(
      system, opts.solver.mode_A, opts.solver.mode_S);

  TimeSeries series;
  std::vector<double> p;
  for (int step = 1; step <= opts.n_steps; ++step) {
    if (step > 1) {
      auto [rhs_u, rhs_p] = assemble_rhs(d.space, d.surface, step_forcing, g_fn);
      system.rhs_u = std::move(rhs_u);
      system.rhs_p = std::move(rhs_p);
    }
    auto [u_new, p_new, report] =
        minres_solve(system, pc, opts.solver.tol, opts.solver.max_iters);
    u = std::move(u_new);
    p = std::move(p_new);

    TimeStepRecord rec;
    rec.step = step;
    rec.time = step * dt;
    rec.energy = kinetic_energy(d.space, d.surface, u);
    rec.minres_iters = report.iterations;
    rec.converged = report.converged;
    series.steps.push_back(rec);
  }
  series.u_final = std::move(u);
  series.p_final = std::move(p);
  return series;
}

}  // namespace tracefem
