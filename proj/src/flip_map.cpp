#include "rggcouple/flip_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rggcouple/errors.hpp"

namespace rgg {

namespace {

constexpr double kPoleGuard = 1e-9;   // psi/kappa domain limit on |x|
constexpr double kClamp = 1e-12;      // inner products clamped into +-(1 - kClamp)
constexpr double kSideNudge = 1e-12;  // keeps the post inner strictly on b's side
constexpr double kUnitTol = 1e-9;

double clamp_inner(double x) {
    return std::clamp(x, -1.0 + kClamp, 1.0 - kClamp);
}

double psi_from_phi(double x, double phix) {
    double num = (1.0 - phix) * (1.0 + phix);
    double den = (1.0 - x) * (1.0 + x);
    return std::sqrt(std::max(0.0, num) / den) - 1.0;
}

void check_unit(Eigen::Ref<const Eigen::VectorXd> v, const char* name) {
    if (std::fabs(v.norm() - 1.0) > kUnitTol) {
        throw std::domain_error(std::string("flip: non-unit input ") + name);
    }
}

// Shared body of flip / flip_interval once the target phi value is known.
// Rebuilds z in place as  phi_target * a + sqrt(1 - phi_target^2) * u  where
// u is the unit vector along the component of z orthogonal to a.
FlipRecord apply_reflection(const SphericalLaw& law, Eigen::Ref<const Eigen::VectorXd> a,
                            Eigen::Ref<Eigen::VectorXd> z, bool b, double x,
                            double phix, double lo_cap, double hi_cap) {
    double tau = law.tau();
    // pin the landing side before touching z; renormalization moves the inner
    // product by ~1 ulp, far below the nudge
    if (b) phix = std::clamp(std::max(phix, tau + kSideNudge), lo_cap, hi_cap);
    else phix = std::clamp(std::min(phix, tau - kSideNudge), lo_cap, hi_cap);

    double xc = clamp_inner(x);
    double psi_v = psi_from_phi(xc, phix);
    double kappa_v = phix - xc - psi_v * xc;

    Eigen::VectorXd w = z - x * a;
    double nw = w.norm();
    for (int attempt = 0; attempt < 6; attempt++) {
        double orth = std::sqrt(std::max(0.0, (1.0 - phix) * (1.0 + phix)));
        if (nw > 1e-14) {
            z = (orth / nw) * w + phix * a;
        } else {
            z = phix * a;  // z was (anti)parallel to a; orthogonal part lost
        }
        z /= z.norm();
        double post = a.dot(z);
        if ((post >= tau) == b) {
            return {x, post, true, psi_v, kappa_v};
        }
        // ulp-level undershoot across tau: push phi further onto b's side
        double step = kSideNudge * static_cast<double>(1 << (2 * attempt));
        phix = b ? std::min(hi_cap, tau + step) : std::max(lo_cap, tau - step);
    }
    throw NumericalError("flip: could not place inner product on requested side");
}

}  // namespace

double psi(const SphericalLaw& law, double x) {
    if (std::fabs(x) > 1.0 - kPoleGuard)
        throw std::domain_error("psi: |x| too close to 1");
    double xc = clamp_inner(x);
    return psi_from_phi(xc, law.phi(xc));
}

double kappa(const SphericalLaw& law, double x) {
    if (std::fabs(x) > 1.0 - kPoleGuard)
        throw std::domain_error("kappa: |x| too close to 1");
    double xc = clamp_inner(x);
    double phix = law.phi(xc);
    double psi_v = psi_from_phi(xc, phix);
    return phix - xc - psi_v * xc;
}

double psi_interval(const SphericalLaw& law, double x, Interval iv) {
    if (std::fabs(x) > 1.0 - kPoleGuard)
        throw std::domain_error("psi_interval: |x| too close to 1");
    double xc = clamp_inner(x);
    return psi_from_phi(xc, law.phi_interval(xc, iv));
}

double kappa_interval(const SphericalLaw& law, double x, Interval iv) {
    if (std::fabs(x) > 1.0 - kPoleGuard)
        throw std::domain_error("kappa_interval: |x| too close to 1");
    double xc = clamp_inner(x);
    double phix = law.phi_interval(xc, iv);
    double psi_v = psi_from_phi(xc, phix);
    return phix - xc - psi_v * xc;
}

FlipRecord flip(const SphericalLaw& law, Eigen::Ref<const Eigen::VectorXd> a,
                Eigen::Ref<Eigen::VectorXd> z, bool b) {
    if (a.size() != z.size()) throw std::domain_error("flip: dimension mismatch");
    check_unit(a, "a");
    check_unit(z, "z");
    double x = a.dot(z);
    bool indicator = (x >= law.tau());
    if (indicator == b) {
        return {x, x, false, 0.0, 0.0};
    }
    double phix = law.phi(clamp_inner(x));
    return apply_reflection(law, a, z, b, x, phix, -1.0, 1.0);
}

FlipRecord flip_interval(const SphericalLaw& law, Eigen::Ref<const Eigen::VectorXd> a,
                         Eigen::Ref<Eigen::VectorXd> z, bool b, Interval iv) {
    if (a.size() != z.size()) throw std::domain_error("flip_interval: dimension mismatch");
    check_unit(a, "a");
    check_unit(z, "z");
    double x = a.dot(z);
    if (x < iv.lo || x > iv.hi) {
        return {x, x, false, 0.0, 0.0};
    }
    bool indicator = (x >= law.tau());
    if (indicator == b) {
        return {x, x, false, 0.0, 0.0};
    }
    double phix = law.phi_interval(clamp_inner(x), iv);
    return apply_reflection(law, a, z, b, x, phix, iv.lo, iv.hi);
}

}  // namespace rgg
