#pragma once

#include <cmath>

#include "rggcouple/errors.hpp"

namespace rgg {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fb,
                            double fm, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || (b - a) < 1e-15) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) throw NumericalError("adaptive quadrature: depth exhausted");
    return adaptive_simpson_rec(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with absolute tolerance. The integrand must be finite on
// [a, b].
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth = 60) {
    if (!(b > a)) return 0.0;
    double fa = f(a);
    double fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fb, fm, whole, tol, depth);
}

}  // namespace rgg
