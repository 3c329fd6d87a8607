#pragma once

#include <array>
#include <cmath>

namespace tracefem {

struct Vec3 {
  double v[3] = {0.0, 0.0, 0.0};

  Vec3() = default;
  Vec3(double x, double y, double z) : v{x, y, z} {}

  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }

  Vec3& operator+=(const Vec3& o) {
    v[0] += o.v[0]; v[1] += o.v[1]; v[2] += o.v[2];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    v[0] -= o.v[0]; v[1] -= o.v[1]; v[2] -= o.v[2];
    return *this;
  }
  Vec3& operator*=(double s) {
    v[0] *= s; v[1] *= s; v[2] *= s;
    return *this;
  }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

/// Row-major 3x3 matrix.
struct Mat3 {
  double m[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};

  double& operator()(int i, int j) { return m[3 * i + j]; }
  double operator()(int i, int j) const { return m[3 * i + j]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
};

inline Vec3 operator*(const Mat3& m, const Vec3& x) {
  return {m(0, 0) * x[0] + m(0, 1) * x[1] + m(0, 2) * x[2],
          m(1, 0) * x[0] + m(1, 1) * x[1] + m(1, 2) * x[2],
          m(2, 0) * x[0] + m(2, 1) * x[1] + m(2, 2) * x[2]};
}

/// Tangential projector I - n n^T for a unit normal n.
inline Mat3 tangential_projector(const Vec3& n) {
  Mat3 p = Mat3::identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) -= n[i] * n[j];
  return p;
}

inline double frobenius_dot(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int k = 0; k < 9; ++k) s += a.m[k] * b.m[k];
  return s;
}

struct Box {
  Vec3 lo;
  Vec3 hi;

  double side(int axis) const { return hi[axis] - lo[axis]; }
  double volume() const { return side(0) * side(1) * side(2); }
};

inline Box cube_box(double half_side) {
  return {{-half_side, -half_side, -half_side}, {half_side, half_side, half_side}};
}

inline double tet_signed_volume(const Vec3& a, const Vec3& b, const Vec3& c,
                                const Vec3& d) {
  return dot(b - a, cross(c - a, d - a)) / 6.0;
}

inline double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

}  // namespace tracefem
