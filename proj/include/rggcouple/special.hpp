#pragma once

namespace rgg {

// log Beta(a, b)
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b), continued fraction evaluation
// (modified Lentz). Absolute accuracy ~1e-15 over the parameter ranges used
// here (a = 1/2, b = (d-1)/2 with d up to ~1e5). Throws NumericalError if the
// continued fraction fails to settle.
double ibeta_reg(double a, double b, double x);

}  // namespace rgg
