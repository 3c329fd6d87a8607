#pragma once

#include "tracefem/assembly.hpp"

namespace tracefem {

/// Discrete error norms, all measured on the reconstructed surface.
struct ErrorReport {
  double l2_u = 0.0;   // ||u_h - u||
  double h1_u = 0.0;   // (||u_h - u||^2 + ||grad u_h - grad u||^2)^(1/2)
  double l2_uT = 0.0;  // tangential part of the velocity error
  double l2_un = 0.0;  // ||n . u_h||, the normal component the penalty damps
  double l2_p = 0.0;   // pressure error after matching surface means
};

ErrorReport error_norms(const TraceSpace& space, const CutSurface& surface,
                        const NormalField& normals, std::span<const double> u,
                        std::span<const double> p,
                        const std::function<Vec3(const Vec3&)>& exact_u,
                        const std::function<Mat3(const Vec3&)>& exact_grad_u,
                        const std::function<double(const Vec3&)>& exact_p);

/// 0.5 * integral of |u_h|^2 over the reconstructed surface.
double kinetic_energy(const TraceSpace& space, const CutSurface& surface,
                      std::span<const double> u);

struct ExponentialFit {
  double amplitude = 0.0;
  double rate = 0.0;  // values ~ amplitude * exp(-rate * t)
};

/// Log-linear least squares of positive samples within [t_begin, t_end].
/// Throws std::invalid_argument with fewer than two usable samples.
ExponentialFit fit_exponential(std::span<const double> times,
                               std::span<const double> values, double t_begin,
                               double t_end);

/// Observed orders: rates[i] = log(e[i]/e[i+1]) / log(h[i]/h[i+1]).
std::vector<double> convergence_rates(std::span<const double> h,
                                      std::span<const double> errors);

/// Slope of log(y) against log(x) by least squares; the fitted exponent of a
/// power law y ~ C x^s.
double fit_power_exponent(std::span<const double> x, std::span<const double> y);

}  // namespace tracefem
