// Generated by tools/generate_manufactured_data.py -- do not edit by hand.
// sha256 of the generating script: 60f2f2cc56f8a3a67ca634f0b1bec95f5af1c7381d07ab6e42e6ea059506db01

#include "tracefem/manufactured.hpp"

#include <cmath>

namespace tracefem {

Vec3 manufactured_velocity(const Vec3& pt) {
  const double x = pt[0], y = pt[1], z = pt[2];
  Vec3 out;
  const double x0 = (y)*(y);
  const double x1 = (x)*(x);
  const double x2 = (z)*(z);
  const double x3 = x1 + x2;
  const double x4 = 1.0/(x0 + x3);
  const double x5 = x*x0;
  out[0] = -x4*(x0*x2 + x1*z + x5 + (z)*(z)*(z)*(z));
  out[1] = x4*y*(x*x2 - x*z + x3);
  out[2] = x4*((x)*(x)*(x) + x*(z)*(z)*(z) - x0*z + x5);
  return out;
}

Mat3 manufactured_velocity_gradient(const Vec3& pt) {
  const double x = pt[0], y = pt[1], z = pt[2];
  Mat3 out;
  const double x0 = (y)*(y);
  const double x1 = (z)*(z);
  const double x2 = x0*x1;
  const double x3 = 2*x2;
  const double x4 = (x)*(x)*(x)*(x);
  const double x5 = (y)*(y)*(y)*(y);
  const double x6 = (x)*(x);
  const double x7 = x0*x6;
  const double x8 = 2*x7;
  const double x9 = x4 + x5 + x8;
  const double x10 = (z)*(z)*(z)*(z);
  const double x11 = x1*x6;
  const double x12 = x10 + 2*x11;
  const double x13 = 1.0/(x12 + x3 + x9);
  const double x14 = x*z;
  const double x15 = x0*x14;
  const double x16 = 2*x15;
  const double x17 = x*x10;
  const double x18 = (z)*(z)*(z);
  const double x19 = x*x18;
  const double x20 = -x7;
  const double x21 = x2 + x20;
  const double x22 = x*x1;
  const double x23 = x13*y;
  const double x24 = x23*(x1 - x14 + x22 + x6);
  const double x25 = (z)*(z)*(z)*(z)*(z);
  const double x26 = 2*z;
  const double x27 = -x16;
  const double x28 = -x11;
  const double x29 = x18*x6;
  const double x30 = x0*x18;
  const double x31 = x*x0;
  const double x32 = x0*z;
  const double x33 = (x)*(x)*(x);
  const double x34 = x1*x33;
  const double x35 = x33*z;
  const double x36 = x*x2;
  const double x37 = 2*x35;
  out(0,0) = -x13*(-x*x3 + x16 - 2*x17 + 2*x19 + x21 + x5);
  out(0,1) = -2*x*x24;
  out(0,2) = -x13*(2*x25 + x26*x5 + x27 + x28 + 4*x29 + 4*x30 + x4 + x7 + x8*z);
  out(1,0) = x23*(x10 - x18 + x2 + x28 + 2*x31 - x32 + x6*z);
  out(1,1) = x13*(x12 + x15 + x17 - x19 - x2 + x20 + x34 - x35 - x36 + x4);
  out(1,2) = x23*(x16 + x22 - x31 + 2*x32 - x33 + x37);
  out(2,0) = x13*(3*x11 + x16 + x2 + x25 - x29 + x30 + x9);
  out(2,1) = -x24*x26;
  out(2,2) = x13*(x17 + x21 + x27 + 3*x34 + 3*x36 - x37 - x5);
  return out;
}

double manufactured_pressure(const Vec3& pt) {
  return pt[0] * pt[1] * pt[1] * pt[1] + pt[2];
}

Vec3 manufactured_forcing_alpha0(const Vec3& pt) {
  const double x = pt[0], y = pt[1], z = pt[2];
  Vec3 out;
  const double x0 = (y)*(y)*(y)*(y);
  const double x1 = 2*x0;
  const double x2 = (z)*(z)*(z);
  const double x3 = (z)*(z)*(z)*(z);
  const double x4 = (y)*(y);
  const double x5 = x*x4;
  const double x6 = x*x2;
  const double x7 = (x)*(x);
  const double x8 = 5*x7;
  const double x9 = (x)*(x)*(x);
  const double x10 = x9*z;
  const double x11 = x4*z;
  const double x12 = x5*z;
  const double x13 = 2*x7;
  const double x14 = x13*x4;
  const double x15 = (y)*(y)*(y)*(y)*(y);
  const double x16 = 4*x15;
  const double x17 = (z)*(z);
  const double x18 = x17*x7;
  const double x19 = (x)*(x)*(x)*(x);
  const double x20 = (y)*(y)*(y);
  const double x21 = x17*x4;
  const double x22 = 2*x20;
  const double x23 = x13*x17 + 2*x21;
  const double x24 = 1.0/(x0 + x14 + x19 + x23 + x3);
  const double x25 = (1.0/2.0)*x24;
  const double x26 = 5*x17;
  const double x27 = x*x15;
  const double x28 = x*x17;
  const double x29 = 3*y;
  const double x30 = 8*x6;
  out[0] = -x25*(-x1 + 2*x10 - 5*x11 + 2*x12 - x14 - x16*x17 + x16*x7 + 4*x18*x20 - 14*x18 + 6*x19*x20 - 5*x2 + 6*x21 - x22*x3 + 8*x3 + 10*x5 + 2*x6 + x8*z - 2*(y)*(y)*(y)*(y)*(y)*(y)*(y));
  out[1] = x24*y*((x)*(x)*(x)*(x)*(x)*x29 + x*x29*x3 - 5*x*z - x11 + 6*x17*x9*y - x2 + x22*x28 + x22*x9 + x26 - x27 + 10*x28 - x5 - x7*z + x8 - x9);
  out[2] = x25*(-x*x26 + x1 - 8*x10*x20 - 14*x10 - 10*x11 - 14*x12 + 2*x19 - x20*x30 + x23 - 8*x27*z + x30 + 4*x4*x7 + 5*x5 + 5*x9);
  return out;
}

double manufactured_divergence(const Vec3& pt) {
  const double x = pt[0], y = pt[1], z = pt[2];
  double out;
  const double x0 = (y)*(y);
  const double x1 = (z)*(z);
  const double x2 = (x)*(x) + x1;
  out = (4*x*x1 - 3*x*z - 2*x0 + x2)/(x0 + x2);
  return out;
}

}  // namespace tracefem
