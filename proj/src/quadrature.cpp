#include "tracefem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace tracefem {

namespace {

void push_triangle_orbit(QuadratureRule& rule, const std::array<Vec3, 3>& tri,
                         double a, double w) {
  // barycentric orbit (1-2a, a, a) and its two cyclic shifts
  const double b = 1.0 - 2.0 * a;
  const double l[3][3] = {{b, a, a}, {a, b, a}, {a, a, b}};
  for (const auto& lam : l) {
    rule.points.push_back(lam[0] * tri[0] + lam[1] * tri[1] + lam[2] * tri[2]);
    rule.weights.push_back(w);
  }
}

}  // namespace

QuadratureRule surface_quadrature(const std::array<Vec3, 3>& tri, int degree) {
  const double area = triangle_area(tri[0], tri[1], tri[2]);
  QuadratureRule rule;
  if (degree == 2) {
    // 3-point interior rule, degree 2
    push_triangle_orbit(rule, tri, 1.0 / 6.0, area / 3.0);
  } else if (degree == 4) {
    // Dunavant 6-point rule, degree 4
    const double a1 = 0.445948490915965;
    const double w1 = 0.223381589678011;
    const double a2 = 0.091576213509771;
    const double w2 = 0.109951743655322;
    push_triangle_orbit(rule, tri, a1, w1 * area);
    push_triangle_orbit(rule, tri, a2, w2 * area);
  } else {
    throw std::invalid_argument("surface_quadrature: degree must be 2 or 4");
  }
  return rule;
}

QuadratureRule volume_quadrature(const std::array<Vec3, 4>& tet, int degree) {
  const double vol = std::abs(
      tet_signed_volume(tet[0], tet[1], tet[2], tet[3]));
  QuadratureRule rule;
  if (degree == 2) {
    // classical 4-point rule, degree 2
    const double a = (5.0 + 3.0 * std::sqrt(5.0)) / 20.0;
    const double b = (5.0 - std::sqrt(5.0)) / 20.0;
    for (int i = 0; i < 4; ++i) {
      double lam[4] = {b, b, b, b};
      lam[i] = a;
      rule.points.push_back(lam[0] * tet[0] + lam[1] * tet[1] +
                            lam[2] * tet[2] + lam[3] * tet[3]);
      rule.weights.push_back(vol / 4.0);
    }
  } else if (degree == 3) {
    // 10-point positive rule: vertices (w = V/60) plus the symmetric 6-point
    // orbit (c,c,d,d) with c+d = 1/2, c*d = 1/28 (w = 7V/45); exact through
    // degree 3 by moment matching of sum(l_i^2) and sum(l_i^3).
    for (int i = 0; i < 4; ++i) {
      rule.points.push_back(tet[i]);
      rule.weights.push_back(vol / 60.0);
    }
    const double c = 0.25 + std::sqrt(21.0) / 28.0;
    const double d = 0.5 - c;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        double lam[4] = {d, d, d, d};
        lam[i] = c;
        lam[j] = c;
        rule.points.push_back(lam[0] * tet[0] + lam[1] * tet[1] +
                              lam[2] * tet[2] + lam[3] * tet[3]);
        rule.weights.push_back(7.0 * vol / 45.0);
      }
  } else {
    throw std::invalid_argument("volume_quadrature: degree must be 2 or 3");
  }
  return rule;
}

}  // namespace tracefem
