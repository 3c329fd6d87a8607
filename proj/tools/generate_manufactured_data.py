#!/usr/bin/env python3
"""Generate closed-form data for the manufactured sphere test case.

Derives, by exact symbolic differentiation, the forcing term and mass source
that make

    u(x) = P (-z^2, y, x)^T,   p(x) = x*y^3 + z,   P = I - x x^T / |x|^2

an exact solution of the tangential surface Stokes system on the unit sphere.
All fields are ambient extensions, valid in a neighborhood of the sphere, so
they can be evaluated directly at quadrature points of the reconstructed
surface.

Writes src/generated/sphere_manufactured.cpp.  Run from the repository root:

    python3 tools/generate_manufactured_data.py
"""

import hashlib
import sys
from pathlib import Path

import sympy as sp
from sympy.printing.cxx import CXX17CodePrinter

x, y, z = sp.symbols("x y z", real=True)
X = sp.Matrix([x, y, z])
r2 = x * x + y * y + z * z
P = sp.eye(3) - X * X.T / r2

u_raw = sp.Matrix([-z * z, y, x])
u = sp.simplify(P * u_raw)
p = x * y**3 + z


def jacobian(v):
    # rows are gradients of the components
    return sp.Matrix(3, 3, lambda i, j: sp.diff(v[i], [x, y, z][j]))


Ju = jacobian(u)
Es = sp.Rational(1, 2) * P * (Ju + Ju.T) * P


def surface_div_row(row):
    J = sp.Matrix(3, 3, lambda i, j: sp.diff(row[i], [x, y, z][j]))
    return sp.trace(J * P)


div_Es = sp.Matrix([surface_div_row(Es.row(i).T) for i in range(3)])
grad_p = sp.Matrix([sp.diff(p, v) for v in (x, y, z)])

# alpha-independent part of the forcing; full forcing is f0 + alpha*u
f0 = sp.Matrix(-P * div_Es + P * grad_p)
g = sp.trace(Ju * P)

f0 = sp.Matrix([sp.cancel(sp.together(c)) for c in f0])
g = sp.cancel(sp.together(g))
u = sp.Matrix([sp.cancel(c) for c in u])
Ju = sp.Matrix(3, 3, lambda i, j: sp.cancel(Ju[i, j]))


class Printer(CXX17CodePrinter):
    def _print_Pow(self, expr):
        if expr.exp.is_Integer and 0 < expr.exp <= 8:
            base = self._print(expr.base)
            return "*".join(["(%s)" % base] * int(expr.exp))
        return super()._print_Pow(expr)


printer = Printer()


def emit(exprs, out_names):
    subs, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    for sym, val in subs:
        lines.append(f"  const double {sym} = {printer.doprint(val)};")
    for name, val in zip(out_names, reduced):
        lines.append(f"  {name} = {printer.doprint(val)};")
    return "\n".join(lines)


body_u = emit(list(u), ["out[0]", "out[1]", "out[2]"])
body_Ju = emit([Ju[i, j] for i in range(3) for j in range(3)],
               [f"out({i},{j})" for i in range(3) for j in range(3)])
body_f0 = emit(list(f0), ["out[0]", "out[1]", "out[2]"])
body_g = emit([g], ["out"])

template = """// Generated by tools/generate_manufactured_data.py -- do not edit by hand.
// sha256 of the generating script: {script_hash}

#include "tracefem/manufactured.hpp"

#include <cmath>

namespace tracefem {{

Vec3 manufactured_velocity(const Vec3& pt) {{
  const double x = pt[0], y = pt[1], z = pt[2];
  Vec3 out;
{body_u}
  return out;
}}

Mat3 manufactured_velocity_gradient(const Vec3& pt) {{
  const double x = pt[0], y = pt[1], z = pt[2];
  Mat3 out;
{body_Ju}
  return out;
}}

double manufactured_pressure(const Vec3& pt) {{
  return pt[0] * pt[1] * pt[1] * pt[1] + pt[2];
}}

Vec3 manufactured_forcing_alpha0(const Vec3& pt) {{
  const double x = pt[0], y = pt[1], z = pt[2];
  Vec3 out;
{body_f0}
  return out;
}}

double manufactured_divergence(const Vec3& pt) {{
  const double x = pt[0], y = pt[1], z = pt[2];
  double out;
{body_g}
  return out;
}}

}}  // namespace tracefem
"""

script_hash = hashlib.sha256(Path(__file__).read_bytes()).hexdigest()
out = template.format(script_hash=script_hash, body_u=body_u, body_Ju=body_Ju,
                      body_f0=body_f0, body_g=body_g)

dest = Path(__file__).resolve().parent.parent / "src" / "generated" / "sphere_manufactured.cpp"
dest.write_text(out)
print(f"wrote {dest} ({len(out)} bytes)", file=sys.stderr)
