#pragma once

#include <Eigen/Core>

#include "rggcouple/sphere_law.hpp"

namespace rgg {

// One application of the orientation-fixing reflection. pre_inner/post_inner
// are <a, z> before and after; if flipped then post_inner = phi(pre_inner)
// up to the renormalization of z', otherwise post_inner = pre_inner.
// psi_val/kappa_val are the decomposition coefficients of the move
// z' = z + s*psi*z + s*kappa*a (both 0 when not flipped).
struct FlipRecord {
    double pre_inner;
    double post_inner;
    bool flipped;
    double psi_val;
    double kappa_val;
};

// Radial stretch of the component orthogonal to the anchor:
// psi(x) = sqrt((1 - phi(x)^2) / (1 - x^2)) - 1.
// Rejects |x| > 1 - 1e-9 (the stretch is singular at the poles).
double psi(const SphericalLaw& law, double x);

// Anchor-direction coefficient: kappa(x) = phi(x) - x - psi(x) * x.
double kappa(const SphericalLaw& law, double x);

// Interval versions, built on phi_interval. x must lie in the interval.
double psi_interval(const SphericalLaw& law, double x, Interval iv);
double kappa_interval(const SphericalLaw& law, double x, Interval iv);

// Force the orientation of z relative to the unit anchor a to the bit b:
// if indicator(<a,z> >= tau) == b, z is untouched; otherwise the component
// of z along a is moved to phi(<a,z>) and the orthogonal component is
// rescaled to keep |z| = 1 (direction preserved, nonnegative multiple).
// z is updated in place. Postcondition: indicator(<a,z'> >= tau) == b, always.
// Throws if a or z is more than 1e-9 away from unit norm.
FlipRecord flip(const SphericalLaw& law, Eigen::Ref<const Eigen::VectorXd> a,
                Eigen::Ref<Eigen::VectorXd> z, bool b);

// Interval variant: acts only when <a,z> lies in [iv.lo, iv.hi] (identity
// otherwise), uses phi_interval, and keeps the post inner product inside the
// interval.
FlipRecord flip_interval(const SphericalLaw& law, Eigen::Ref<const Eigen::VectorXd> a,
                         Eigen::Ref<Eigen::VectorXd> z, bool b, Interval iv);

}  // namespace rgg
