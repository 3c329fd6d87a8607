#pragma once

#include "tracefem/geometry.hpp"

namespace tracefem {

/// Smooth reference solution on the unit sphere, extended to the ambient
/// space.  Implementations are generated symbolically by
/// tools/generate_manufactured_data.py; do not edit the generated file.

/// Tangential velocity u(x) = P(x) (-z^2, y, x)^T with P = I - x x^T / |x|^2.
Vec3 manufactured_velocity(const Vec3& x);

/// Ambient Jacobian of manufactured_velocity (rows = component gradients).
Mat3 manufactured_velocity_gradient(const Vec3& x);

/// Pressure p(x) = x y^3 + z.
double manufactured_pressure(const Vec3& x);

/// Momentum forcing for the zero-order coefficient alpha = 0; the full
/// forcing is this value plus alpha * manufactured_velocity(x).
Vec3 manufactured_forcing_alpha0(const Vec3& x);

/// Surface divergence of the velocity, the data of the continuity equation.
double manufactured_divergence(const Vec3& x);

}  // namespace tracefem
