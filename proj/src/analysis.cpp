#include "tracefem/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "tracefem/quadrature.hpp"

namespace tracefem {

ErrorReport error_norms(const TraceSpace& space, const CutSurface& surface,
                        const NormalField& normals, std::span<const double> u,
                        std::span<const double> p,
                        const std::function<Vec3(const Vec3&)>& exact_u,
                        const std::function<Mat3(const Vec3&)>& exact_grad_u,
                        const std::function<double(const Vec3&)>& exact_p) {
  double e_l2 = 0.0, e_grad = 0.0, e_tan = 0.0, e_norm = 0.0;
  double p_diff = 0.0, p_diff_sq = 0.0, area = 0.0;

  // first pass: area-weighted mean of the pressure difference, so the
  // free constant of each field drops out of the error
  for (const auto& tri : surface.triangles) {
    const auto rule = surface_quadrature(tri.points, 4);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double w = rule.weights[q];
      const Vec3& x = rule.points[q];
      p_diff += w * (eval_pressure(space, p, tri.parent_tet, x) - exact_p(x));
      area += w;
    }
  }
  const double p_shift = p_diff / area;

  for (const auto& tri : surface.triangles) {
    const auto rule = surface_quadrature(tri.points, 4);
    const Mat3 grad_h = velocity_gradient(space, u, tri.parent_tet);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double w = rule.weights[q];
      const Vec3& x = rule.points[q];
      const Vec3 uh = eval_velocity(space, u, tri.parent_tet, x);
      const Vec3 du = uh - exact_u(x);
      const Vec3 n = normals(tri.parent_tet, x);
      const Mat3 P = tangential_projector(n);
      const Vec3 duT = P * uh - exact_u(x);

      e_l2 += w * dot(du, du);
      e_tan += w * dot(duT, duT);
      e_norm += w * dot(n, uh) * dot(n, uh);

      // compare tangential derivatives only: the discrete field is flat in
      // the normal direction by construction, the extension of the exact
      // solution is not
      Mat3 dg = grad_h;
      const Mat3 ge = exact_grad_u(x);
      for (int k = 0; k < 9; ++k) dg.m[k] -= ge.m[k];
      Mat3 dgt;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) dgt(i, j) += dg(i, k) * P(k, j);
      e_grad += w * frobenius_dot(dgt, dgt);

      const double dp =
          eval_pressure(space, p, tri.parent_tet, x) - exact_p(x) - p_shift;
      p_diff_sq += w * dp * dp;
    }
  }

  ErrorReport r;
  r.l2_u = std::sqrt(e_l2);
  r.h1_u = std::sqrt(e_l2 + e_grad);
  r.l2_uT = std::sqrt(e_tan);
  r.l2_un = std::sqrt(e_norm);
  r.l2_p = std::sqrt(p_diff_sq);
  return r;
}

double kinetic_energy(const TraceSpace& space, const CutSurface& surface,
                      std::span<const double> u) {
  double e = 0.0;
  for (const auto& tri : surface.triangles) {
    const auto rule = surface_quadrature(tri.points, 2);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const Vec3 uh = eval_velocity(space, u, tri.parent_tet, rule.points[q]);
      e += rule.weights[q] * dot(uh, uh);
    }
  }
  return 0.5 * e;
}

ExponentialFit fit_exponential(std::span<const double> times,
                               std::span<const double> values, double t_begin,
                               double t_end) {
  std::vector<double> t, logv;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_begin || times[i] > t_end) continue;
    if (values[i] <= 0.0)
      throw std::invalid_argument("fit_exponential: nonpositive sample");
    t.push_back(times[i]);
    logv.push_back(std::log(values[i]));
  }
  const std::size_t n = t.size();
  if (n < 2) throw std::invalid_argument("fit_exponential: window too small");

  double st = 0.0, sv = 0.0, stt = 0.0, stv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    st += t[i];
    sv += logv[i];
    stt += t[i] * t[i];
    stv += t[i] * logv[i];
  }
  const double denom = n * stt - st * st;
  const double slope = (n * stv - st * sv) / denom;
  const double intercept = (sv - slope * st) / n;

  ExponentialFit fit;
  fit.rate = -slope;
  fit.amplitude = std::exp(intercept);
  return fit;
}

std::vector<double> convergence_rates(std::span<const double> h,
                                      std::span<const double> errors) {
  std::vector<double> rates;
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    rates.push_back(std::log(errors[i] / errors[i + 1]) /
                    std::log(h[i] / h[i + 1]));
  return rates;
}

double fit_power_exponent(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("fit_power_exponent: need two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace tracefem
