#pragma once

#include <string>

#include "tracefem/assembly.hpp"
#include "tracefem/krylov.hpp"

namespace tracefem {

/// One row of the run summary table; every row carries the full parameter
/// set so the CSV is self-describing.
struct SummaryRow {
  std::string case_name;
  int level = 0;
  double h = 0.0;
  double c_tau = 1.0;
  double c_p = 1.0;
  double c_u = 1.0;
  double alpha = 0.0;
  double dt = 0.0;
  double l2_u = 0.0;
  double h1_u = 0.0;
  double l2_uT = 0.0;
  double l2_un = 0.0;
  double l2_p = 0.0;
  int minres_iters = 0;
  double avg_inner_A = 0.0;
  double avg_inner_S = 0.0;
  double wall_seconds = 0.0;
};

/// Writes the summary table with a fixed header and %.12g formatting, so two
/// identical serial runs produce bitwise-identical files.
void write_summary_csv(const std::string& path,
                       const std::vector<SummaryRow>& rows);

/// iteration,residual pairs of one Krylov run.
void write_residuals_csv(const std::string& path, const KrylovReport& report);

/// Legacy ASCII VTK POLYDATA: the cut triangles with point-data velocity
/// vectors and pressure scalars evaluated at the triangle corners.
void write_vtk_surface(const std::string& path, const TraceSpace& space,
                       const CutSurface& surface, std::span<const double> u,
                       std::span<const double> p);

/// Matrix Market coordinate format (general, 1-based).
void write_matrix_market(const std::string& path, const SparseMatrix& m);

}  // namespace tracefem
