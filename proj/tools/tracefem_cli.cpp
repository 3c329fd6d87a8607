// Command-line driver: steady convergence studies, parameter sweeps,
// conditioning studies, and time-dependent runs, all emitting CSV tables
// and optional VTK snapshots.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tracefem/analysis.hpp"
#include "tracefem/driver.hpp"
#include "tracefem/io.hpp"

using namespace tracefem;

namespace {

struct CommonOpts {
  double c_tau = 1.0, c_p = 1.0, c_u = 1.0, alpha = 1.0;
  double tol = 1e-8;
  int max_iters = 300;
  std::string normal_mode = "p2";
  std::string output_dir = ".";
  bool verbose = false;
  unsigned seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--c-tau", o.c_tau, "penalty constant c_tau");
  cmd->add_option("--c-p", o.c_p, "pressure stabilization constant c_p");
  cmd->add_option("--c-u", o.c_u, "velocity stabilization constant c_u");
  cmd->add_option("--alpha", o.alpha, "zero-order coefficient");
  cmd->add_option("--tol", o.tol, "MINRES absolute residual tolerance");
  cmd->add_option("--max-iters", o.max_iters, "MINRES iteration budget");
  cmd->add_option("--normal-mode", o.normal_mode, "p2 | analytic")
      ->check(CLI::IsMember({"p2", "analytic"}));
  cmd->add_option("--output-dir", o.output_dir, "directory for output files");
  cmd->add_option("--seed", o.seed, "seed for randomized placements");
  cmd->add_flag("--verbose", o.verbose, "also write residuals.csv per solve");
}

NormalMode normal_mode_of(const CommonOpts& o) {
  return o.normal_mode == "analytic" ? NormalMode::analytic
                                     : NormalMode::p2_interpolant;
}

SolverOptions solver_options(const CommonOpts& o) {
  SolverOptions s;
  s.tol = o.tol;
  s.max_iters = o.max_iters;
  return s;
}

void ensure_output_dir(const CommonOpts& o) {
  if (o.output_dir != ".") std::filesystem::create_directories(o.output_dir);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct LevelRange {
  int lo = 2, hi = 4;
};

void add_levels_option(CLI::App* cmd, LevelRange& r, const std::string& def) {
  cmd->add_option_function<std::string>(
         "--levels",
         [&r](const std::string& s) {
           const auto to_int = [](const std::string& t) {
             std::size_t used = 0;
             const int v = std::stoi(t, &used);
             if (used != t.size())
               throw CLI::ValidationError("--levels", "expected L or LO..HI");
             return v;
           };
           const auto pos = s.find("..");
           if (pos == std::string::npos) {
             r.lo = r.hi = to_int(s);
           } else {
             r.lo = to_int(s.substr(0, pos));
             r.hi = to_int(s.substr(pos + 2));
           }
           if (r.lo < 0 || r.hi < r.lo)
             throw CLI::ValidationError("--levels", "expected L or LO..HI");
         },
         "refinement level or range LO..HI")
      ->default_str(def);
}

// one steady manufactured-solution solve on the sphere
SummaryRow run_sphere_steady(int level, const CommonOpts& o,
                             bool write_fields) {
  const auto t0 = std::chrono::steady_clock::now();
  auto d = discretize(sphere_level_set(), level, cube_box(5.0 / 3.0),
                      normal_mode_of(o));
  const FormParams params = FormParams::from_constants(d->h(), o.alpha,
                                                       o.c_tau, o.c_u, o.c_p);
  const auto data = sphere_manufactured_data(o.alpha);
  const NormalField normals = d->normals();
  const SaddleSystem system =
      assemble_system(d->space, d->surface, d->band, params, normals,
                      [&](const SurfaceTriangle&, const Vec3& x) {
                        return data.forcing(x);
                      },
                      [&](const SurfaceTriangle&, const Vec3& x) {
                        return data.divergence(x);
                      });
  const SteadySolveResult sol = solve_steady(system, solver_options(o));
  const ErrorReport err =
      error_norms(d->space, d->surface, normals, sol.u, sol.p, data.velocity,
                  data.velocity_gradient, data.pressure);

  SummaryRow row;
  row.case_name = "sphere-steady";
  row.level = level;
  row.h = d->h();
  row.c_tau = o.c_tau;
  row.c_p = o.c_p;
  row.c_u = o.c_u;
  row.alpha = o.alpha;
  row.l2_u = err.l2_u;
  row.h1_u = err.h1_u;
  row.l2_uT = err.l2_uT;
  row.l2_un = err.l2_un;
  row.l2_p = err.l2_p;
  row.minres_iters = sol.minres.iterations;
  row.avg_inner_A = sol.avg_inner_A;
  row.avg_inner_S = sol.avg_inner_S;
  row.wall_seconds = seconds_since(t0);
  if (!sol.minres.converged) row.minres_iters = -row.minres_iters;

  if (o.verbose)
    write_residuals_csv(o.output_dir + "/residuals_level" +
                            std::to_string(level) + ".csv",
                        sol.minres);
  if (write_fields)
    write_vtk_surface(o.output_dir + "/fields_sphere_level" +
                          std::to_string(level) + ".vtk",
                      d->space, d->surface, sol.u, sol.p);
  return row;
}

int cmd_converge(const CommonOpts& o, const LevelRange& levels,
                 bool write_fields) {
  std::vector<SummaryRow> rows;
  bool all_ok = true;
  for (int l = levels.lo; l <= levels.hi; ++l) {
    SummaryRow row = run_sphere_steady(l, o, write_fields && l == levels.hi);
    if (row.minres_iters < 0) {
      all_ok = false;
      row.minres_iters = -row.minres_iters;
    }
    std::printf("level %d  h=%.4f  l2_u=%.3e  h1_u=%.3e  l2_p=%.3e  "
                "iters=%d\n",
                row.level, row.h, row.l2_u, row.h1_u, row.l2_p,
                row.minres_iters);
    rows.push_back(row);
  }
  write_summary_csv(o.output_dir + "/summary.csv", rows);

  if (rows.size() > 1) {
    std::vector<double> hs, h1, uT;
    for (const auto& r : rows) {
      hs.push_back(r.h);
      h1.push_back(r.h1_u);
      uT.push_back(r.l2_uT);
    }
    const auto rh1 = convergence_rates(hs, h1);
    const auto ruT = convergence_rates(hs, uT);
    std::printf("observed rates, last step: h1_u=%.2f  l2_uT=%.2f\n",
                rh1.back(), ruT.back());
  }
  return all_ok ? 0 : 1;
}

int cmd_sweep_cp(CommonOpts o, int level, const std::vector<double>& values) {
  std::vector<SummaryRow> rows;
  bool all_ok = true;
  for (double cp : values) {
    o.c_p = cp;
    SummaryRow row = run_sphere_steady(level, o, false);
    row.case_name = "sphere-sweep-cp";
    if (row.minres_iters < 0) {
      all_ok = false;
      row.minres_iters = -row.minres_iters;
    }
    std::printf("c_p=%g  l2_u=%.3e  l2_p=%.3e  iters=%d\n", cp, row.l2_u,
                row.l2_p, row.minres_iters);
    rows.push_back(row);
  }
  write_summary_csv(o.output_dir + "/summary.csv", rows);
  return all_ok ? 0 : 1;
}

int cmd_cond_study(const CommonOpts& o, const LevelRange& levels, int shifts,
                   int shift_level) {
  auto out = std::fopen((o.output_dir + "/condition.csv").c_str(), "w");
  if (!out) throw std::runtime_error("cannot open condition.csv");
  std::fprintf(out, "level,shift_x,shift_y,shift_z,h,dim,cond\n");

  // the saddle matrix annihilates constant pressures exactly, so the
  // condition number is estimated on the complement of that direction
  const auto system_cond = [](const SaddleSystem& system) {
    const int dim = system.n() + system.m();
    std::vector<double> kernel(dim, 0.0);
    for (int i = system.n(); i < dim; ++i) kernel[i] = 1.0;
    return estimate_condition_number(
        [&system](std::span<const double> x, std::span<double> y) {
          system.apply_block(x, y);
        },
        dim, 220, kernel);
  };

  std::vector<double> hs, conds;
  for (int l = levels.lo; l <= levels.hi; ++l) {
    auto d = discretize(sphere_level_set(), l, cube_box(5.0 / 3.0),
                        normal_mode_of(o));
    const FormParams params = FormParams::from_constants(
        d->h(), o.alpha, o.c_tau, o.c_u, o.c_p);
    const SaddleSystem system = assemble_system(
        d->space, d->surface, d->band, params, d->normals(),
        [](const SurfaceTriangle&, const Vec3&) { return Vec3{}; },
        [](const SurfaceTriangle&, const Vec3&) { return 0.0; });
    const int dim = system.n() + system.m();
    const double cond = system_cond(system);
    std::fprintf(out, "%d,0,0,0,%.12g,%d,%.12g\n", l, d->h(), dim, cond);
    std::printf("level %d  h=%.4f  dim=%d  cond=%.3e\n", l, d->h(), dim, cond);
    hs.push_back(d->h());
    conds.push_back(cond);
  }
  if (hs.size() > 1)
    std::printf("fitted exponent of cond vs h: %.2f\n",
                fit_power_exponent(hs, conds));

  std::mt19937 rng(o.seed);
  for (int s = 0; s < shifts; ++s) {
    const double h = mesh_size(shift_level, cube_box(5.0 / 3.0));
    std::uniform_real_distribution<double> dist(-h / 4.0, h / 4.0);
    const Vec3 shift{dist(rng), dist(rng), dist(rng)};
    auto d = discretize(sphere_level_set(shift), shift_level,
                        cube_box(5.0 / 3.0), normal_mode_of(o));
    const FormParams params = FormParams::from_constants(
        d->h(), o.alpha, o.c_tau, o.c_u, o.c_p);
    const SaddleSystem system = assemble_system(
        d->space, d->surface, d->band, params, d->normals(),
        [](const SurfaceTriangle&, const Vec3&) { return Vec3{}; },
        [](const SurfaceTriangle&, const Vec3&) { return 0.0; });
    const int dim = system.n() + system.m();
    const double cond = system_cond(system);
    std::fprintf(out, "%d,%.12g,%.12g,%.12g,%.12g,%d,%.12g\n", shift_level,
                 shift[0], shift[1], shift[2], d->h(), dim, cond);
    std::printf("shift (%.3e,%.3e,%.3e)  cond=%.3e\n", shift[0], shift[1],
                shift[2], cond);
  }
  std::fclose(out);
  return 0;
}

int cmd_killing(const CommonOpts& o, int level, double dt, double t_end) {
  const auto t0 = std::chrono::steady_clock::now();
  auto d = discretize(sphere_level_set(), level, cube_box(5.0 / 3.0),
                      normal_mode_of(o));
  FormParams base;
  base.c_tau = o.c_tau;
  base.c_u = o.c_u;
  base.c_p = o.c_p;

  TimeStepOptions topts;
  topts.dt = dt;
  topts.n_steps = static_cast<int>(t_end / dt + 0.5);
  topts.solver = solver_options(o);

  std::vector<double> u0 = interpolate_nodal(
      std::function<Vec3(const Vec3&)>(killing_initial_velocity), d->space);
  const TimeSeries series = backward_euler_run(*d, base, std::move(u0), topts);

  auto out = std::fopen((o.output_dir + "/energy.csv").c_str(), "w");
  if (!out) throw std::runtime_error("cannot open energy.csv");
  std::fprintf(out, "time,energy,minres_iters\n");
  bool all_ok = true;
  std::vector<double> times, energies;
  int total_iters = 0;
  for (const auto& rec : series.steps) {
    std::fprintf(out, "%.12g,%.12g,%d\n", rec.time, rec.energy,
                 rec.minres_iters);
    times.push_back(rec.time);
    energies.push_back(rec.energy);
    total_iters += rec.minres_iters;
    all_ok = all_ok && rec.converged;
  }
  std::fclose(out);

  SummaryRow row;
  row.case_name = "sphere-killing";
  row.level = level;
  row.h = d->h();
  row.c_tau = o.c_tau;
  row.c_p = o.c_p;
  row.c_u = o.c_u;
  row.alpha = 1.0 / dt;
  row.dt = dt;
  row.minres_iters = total_iters / static_cast<int>(series.steps.size());
  row.wall_seconds = seconds_since(t0);
  write_summary_csv(o.output_dir + "/summary.csv", {row});

  if (t_end >= 5.0) {
    const ExponentialFit fit = fit_exponential(times, energies, 2.0, 5.0);
    std::printf("fitted decay rate lambda=%.4e on t in [2,5]\n", fit.rate);
  }
  std::printf("final energy %.6e after %zu steps\n", energies.back(),
              series.steps.size());
  return all_ok ? 0 : 1;
}

int cmd_source_sink(const CommonOpts& o, int level, double dt, int steps) {
  const auto t0 = std::chrono::steady_clock::now();
  auto d = discretize(genus_surface_level_set(), level, cube_box(3.0),
                      normal_mode_of(o));
  FormParams base;
  base.c_tau = o.c_tau;
  base.c_u = o.c_u;
  base.c_p = o.c_p;

  TimeStepOptions topts;
  topts.dt = dt;
  topts.n_steps = steps;
  topts.solver = solver_options(o);

  const double h = d->h();
  std::vector<double> u0(d->space.n_velocity_dofs(), 0.0);
  const TimeSeries series = backward_euler_run(
      *d, base, std::move(u0), topts,
      [h](const Vec3& x) { return source_sink_g(x, h); });

  auto out = std::fopen((o.output_dir + "/energy.csv").c_str(), "w");
  if (!out) throw std::runtime_error("cannot open energy.csv");
  std::fprintf(out, "time,energy,minres_iters\n");
  bool all_ok = true;
  for (const auto& rec : series.steps) {
    std::fprintf(out, "%.12g,%.12g,%d\n", rec.time, rec.energy,
                 rec.minres_iters);
    all_ok = all_ok && rec.converged;
  }
  std::fclose(out);

  write_vtk_surface(o.output_dir + "/fields_source_sink.vtk", d->space,
                    d->surface, series.u_final, series.p_final);

  SummaryRow row;
  row.case_name = "genus3-source-sink";
  row.level = level;
  row.h = h;
  row.c_tau = o.c_tau;
  row.c_p = o.c_p;
  row.c_u = o.c_u;
  row.alpha = 1.0 / dt;
  row.dt = dt;
  row.wall_seconds = seconds_since(t0);
  write_summary_csv(o.output_dir + "/summary.csv", {row});

  std::printf("final energy %.6e after %d steps\n",
              series.steps.back().energy, steps);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace finite element solver for the surface Stokes problem"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags win");

  CommonOpts o;
  LevelRange levels;
  int level = 4;
  std::vector<double> cp_values{0.01, 0.05, 0.1, 0.5, 1, 5, 10};
  double dt = 0.1;
  double t_end = 5.0;
  int steps = 20;
  int shifts = 0;
  int shift_level = 2;
  bool write_fields = false;

  auto* conv = app.add_subcommand(
      "converge", "steady solve on the sphere over a level range");
  add_common(conv, o);
  add_levels_option(conv, levels, "2..4");
  conv->add_flag("--write-fields", write_fields,
                 "VTK snapshot at the finest level");

  auto* sweep = app.add_subcommand(
      "sweep-cp", "steady sphere solves over a list of c_p values");
  add_common(sweep, o);
  sweep->add_option("--level", level, "refinement level");
  sweep->add_option("--values", cp_values, "c_p values")->delimiter(',');

  auto* cond = app.add_subcommand(
      "cond-study", "condition numbers of the saddle matrix");
  add_common(cond, o);
  add_levels_option(cond, levels, "1..3");
  cond->add_option("--shifts", shifts,
                   "number of random sub-cell sphere shifts");
  cond->add_option("--shift-level", shift_level, "level for the shifted runs");

  auto* kill = app.add_subcommand(
      "killing", "unforced flow from a mixed-harmonic initial velocity");
  add_common(kill, o);
  kill->add_option("--level", level, "refinement level");
  kill->add_option("--dt", dt, "time step");
  kill->add_option("--t-end", t_end, "final time");

  auto* ss = app.add_subcommand(
      "source-sink", "flow driven by a source/sink pair on the genus-3 surface");
  add_common(ss, o);
  ss->add_option("--level", level, "refinement level");
  ss->add_option("--dt", dt, "time step");
  ss->add_option("--steps", steps, "number of time steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ensure_output_dir(o);
    if (conv->parsed()) return cmd_converge(o, levels, write_fields);
    if (sweep->parsed()) return cmd_sweep_cp(o, level, cp_values);
    if (cond->parsed()) return cmd_cond_study(o, levels, shifts, shift_level);
    if (kill->parsed()) return cmd_killing(o, level, dt, t_end);
    if (ss->parsed()) return cmd_source_sink(o, level, dt, steps);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
