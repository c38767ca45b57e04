#pragma once

#include "oham/poly.hpp"

namespace oham {

/// Green's function of u'' = f, u(0) = u(1) = 0 on the unit square:
/// x (s - 1) for x <= s, s (x - 1) for s <= x. Nonpositive everywhere.
double green_eval(double x, double s);

/// u(x) = integral over [0,1] of G(x,s) f(s) ds, computed in closed form.
///
/// The result has degree deg f + 2, satisfies u'' = f and vanishes at both
/// ends. Coefficients: u_0 = 0, u_1 = -sum f_i / ((i+1)(i+2)),
/// u_k = f_{k-2} / (k (k-1)) for k >= 2.
Polynomial apply_green(const Polynomial& f);

}  // namespace oham
