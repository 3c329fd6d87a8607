#pragma once

#include <array>
#include <vector>

#include "tracefem/geometry.hpp"

namespace tracefem {

struct QuadratureRule {
  std::vector<Vec3> points;
  std::vector<double> weights;  // carry the element measure

  double total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
};

/// Symmetric rule on a physical triangle, exact for polynomials of total
/// degree 2 or 4; weights sum to the triangle area.  Throws for other degrees.
QuadratureRule surface_quadrature(const std::array<Vec3, 3>& triangle, int degree);

/// Symmetric rule on a physical tetrahedron, exact for total degree 2 or 3;
/// weights sum to the tet volume, all weights positive.
QuadratureRule volume_quadrature(const std::array<Vec3, 4>& tet, int degree);

}  // namespace tracefem
