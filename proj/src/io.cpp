#include "tracefem/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tracefem {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_summary_csv(const std::string& path,
                       const std::vector<SummaryRow>& rows) {
  auto out = open_out(path);
  out << "case,level,h,c_tau,c_p,c_u,alpha,dt,l2_u,h1_u,l2_uT,l2_un,l2_p,"
         "minres_iters,avg_inner_A,avg_inner_S,wall_seconds\n";
  for (const auto& r : rows) {
    out << r.case_name << ',' << r.level << ',' << fmt(r.h) << ','
        << fmt(r.c_tau) << ',' << fmt(r.c_p) << ',' << fmt(r.c_u) << ','
        << fmt(r.alpha) << ',' << fmt(r.dt) << ',' << fmt(r.l2_u) << ','
        << fmt(r.h1_u) << ',' << fmt(r.l2_uT) << ',' << fmt(r.l2_un) << ','
        << fmt(r.l2_p) << ',' << r.minres_iters << ',' << fmt(r.avg_inner_A)
        << ',' << fmt(r.avg_inner_S) << ',' << fmt(r.wall_seconds) << '\n';
  }
}

void write_residuals_csv(const std::string& path, const KrylovReport& report) {
  auto out = open_out(path);
  out << "iteration,residual\n";
  for (std::size_t i = 0; i < report.residual_history.size(); ++i)
    out << i << ',' << fmt(report.residual_history[i]) << '\n';
}

void write_vtk_surface(const std::string& path, const TraceSpace& space,
                       const CutSurface& surface, std::span<const double> u,
                       std::span<const double> p) {
  auto out = open_out(path);
  const std::size_t nt = surface.triangles.size();

  out << "# vtk DataFile Version 3.0\n"
      << "cut surface with velocity and pressure\n"
      << "ASCII\nDATASET POLYDATA\n";
  out << "POINTS " << 3 * nt << " double\n";
  for (const auto& tri : surface.triangles)
    for (const auto& pt : tri.points)
      out << fmt(pt[0]) << ' ' << fmt(pt[1]) << ' ' << fmt(pt[2]) << '\n';

  out << "POLYGONS " << nt << ' ' << 4 * nt << '\n';
  for (std::size_t t = 0; t < nt; ++t)
    out << "3 " << 3 * t << ' ' << 3 * t + 1 << ' ' << 3 * t + 2 << '\n';

  out << "POINT_DATA " << 3 * nt << '\n';
  out << "VECTORS velocity double\n";
  for (const auto& tri : surface.triangles)
    for (const auto& pt : tri.points) {
      const Vec3 v = eval_velocity(space, u, tri.parent_tet, pt);
      out << fmt(v[0]) << ' ' << fmt(v[1]) << ' ' << fmt(v[2]) << '\n';
    }
  out << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
  for (const auto& tri : surface.triangles)
    for (const auto& pt : tri.points)
      out << fmt(eval_pressure(space, p, tri.parent_tet, pt)) << '\n';
}

void write_matrix_market(const std::string& path, const SparseMatrix& m) {
  auto out = open_out(path);
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  const auto off = m.row_offsets();
  const auto cols = m.col_indices();
  const auto vals = m.values();
  for (int r = 0; r < m.rows(); ++r)
    for (int k = off[r]; k < off[r + 1]; ++k)
      out << r + 1 << ' ' << cols[k] + 1 << ' ' << fmt(vals[k]) << '\n';
}

}  // namespace tracefem
