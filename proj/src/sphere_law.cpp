#include "rggcouple/sphere_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rggcouple/errors.hpp"
#include "rggcouple/quadrature.hpp"
#include "rggcouple/special.hpp"

namespace rgg {

namespace {

// Inputs to phi and the flip maps are clamped this far inside [-1, 1];
// closer to the boundary the value is pinned to the exact endpoint.
constexpr double kEdge = 1e-12;

double clamp01_open(double t) {
    // keep a quantile argument strictly inside (0,1)
    return std::min(std::max(t, 1e-300), 1.0 - 1e-16);
}

}  // namespace

SphericalLaw::SphericalLaw(int d, double p, double cdf_tol)
    : d_(d), p_(p), cdf_tol_(cdf_tol) {
    if (d < 2) throw std::domain_error("SphericalLaw: d must be >= 2");
    if (!(p > 0.0 && p <= 0.5)) throw std::domain_error("SphericalLaw: p must be in (0, 1/2]");
    if (!(cdf_tol > 0.0 && cdf_tol < 1e-3)) throw std::domain_error("SphericalLaw: bad cdf_tol");
    log_norm_ = std::lgamma(0.5 * d) - std::lgamma(0.5 * (d - 1)) -
                0.5 * std::log(3.14159265358979323846);
    tau_ = (p == 0.5) ? 0.0 : quantile(1.0 - p);
}

double SphericalLaw::pdf(double x) const {
    if (x < -1.0 || x > 1.0) return 0.0;
    double e = 0.5 * (d_ - 3);
    double one_m = (1.0 - x) * (1.0 + x);
    if (one_m <= 0.0) {
        if (e > 0.0) return 0.0;
        if (e == 0.0) return std::exp(log_norm_);
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_norm_ + e * std::log(one_m));
}

double SphericalLaw::cdf(double x) const {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double half_i = 0.5 * ibeta_reg(0.5, 0.5 * (d_ - 1), x * x);
    return x >= 0.0 ? 0.5 + half_i : 0.5 - half_i;
}

double SphericalLaw::quantile(double q) const {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("quantile: q outside (0,1)");
    if (q == 0.5) return 0.0;
    double lo = -1.0, hi = 1.0;
    double x = 0.0;
    double fx = 0.5 - q;  // cdf(0) - q
    double best = x, best_abs = std::fabs(fx);
    int polish = 0;
    for (int iter = 0; iter < 300; iter++) {
        bool within = std::fabs(fx) <= cdf_tol_;
        if (fx > 0.0) hi = x; else lo = x;
        if (hi - lo < 1e-16) break;
        double cand = x;
        double dens = pdf(x);
        bool took_newton = false;
        if (dens > 1e-300 && std::isfinite(dens)) {
            cand = x - fx / dens;
            if (cand > lo && cand < hi) took_newton = true;
        }
        if (within) {
            // the cdf target is met; a few plain Newton steps pin down x
            // itself, whose error is the cdf error divided by the density
            if (!took_newton || polish >= 4 ||
                std::fabs(cand - x) <= 1e-15 * std::max(1.0, std::fabs(x)))
                break;
            polish++;
        } else if (!took_newton || (iter & 3) == 3) {
            cand = 0.5 * (lo + hi);
        }
        x = cand;
        fx = cdf(x) - q;
        double a = std::fabs(fx);
        if (a < best_abs) { best_abs = a; best = x; }
    }
    if (std::fabs(fx) < best_abs) best = x;
    return best;
}

double SphericalLaw::phi(double x) const {
    if (x <= -1.0 + kEdge) return 1.0;
    if (x >= 1.0 - kEdge) return -1.0;
    if (x == tau_) return tau_;
    double c = cdf(x);
    double t;
    if (x <= tau_) {
        t = 1.0 - p_ * c / (1.0 - p_);
    } else {
        t = (1.0 - p_) * (1.0 - c) / p_;
    }
    double y = quantile(clamp01_open(t));
    // the two conditional pieces must land on opposite sides of tau
    if (x < tau_) y = std::max(y, tau_);
    else if (x > tau_) y = std::min(y, tau_);
    return std::clamp(y, -1.0, 1.0);
}

double SphericalLaw::phi_interval(double x, Interval iv) const {
    if (!(iv.lo >= -1.0 && iv.hi <= 1.0 && iv.lo <= iv.hi))
        throw std::domain_error("phi_interval: bad interval");
    if (!(iv.lo <= tau_ && tau_ <= iv.hi))
        throw std::domain_error("phi_interval: interval must contain tau");
    if (x < iv.lo || x > iv.hi)
        throw std::domain_error("phi_interval: x outside interval");
    double cu = cdf(iv.lo), cv = cdf(iv.hi), ct = 1.0 - p_;
    double lower_mass = ct - cu, upper_mass = cv - ct;
    if (lower_mass < cdf_tol_ || upper_mass < cdf_tol_)
        throw std::domain_error("phi_interval: degenerate interval mass");
    if (x == tau_) return tau_;
    if (x <= iv.lo) return iv.hi;
    if (x >= iv.hi) return iv.lo;
    double c = cdf(x);
    double y;
    if (x < tau_) {
        double target = cv - upper_mass * (c - cu) / lower_mass;
        y = quantile(clamp01_open(target));
        y = std::clamp(y, tau_, iv.hi);
    } else {
        double target = cu + lower_mass * (cv - c) / upper_mass;
        y = quantile(clamp01_open(target));
        y = std::clamp(y, iv.lo, tau_);
    }
    return y;
}

double SphericalLaw::q_interval(Interval iv) const {
    if (!(iv.lo >= -1.0 && iv.hi <= 1.0 && iv.lo <= iv.hi))
        throw std::domain_error("q_interval: bad interval");
    if (!(iv.lo <= tau_ && tau_ <= iv.hi))
        throw std::domain_error("q_interval: interval must contain tau");
    double cu = cdf(iv.lo), cv = cdf(iv.hi);
    double mass = cv - cu;
    if (mass < cdf_tol_) throw std::domain_error("q_interval: degenerate interval mass");
    return std::clamp((cv - (1.0 - p_)) / mass, 0.0, 1.0);
}

double SphericalLaw::conditional_moment(int k) const {
    if (k < 0) throw std::domain_error("conditional_moment: k must be >= 0");
    if (k == 0) return 1.0;
    double tol = std::max(p_, 1e-8) * 1e-11;
    if (d_ == 2) {
        // density is singular at x=1; substitute x = cos(theta)
        double theta1 = std::acos(std::clamp(tau_, -1.0, 1.0));
        auto f = [&](double th) {
            return std::pow(std::cos(th), k) / 3.14159265358979323846;
        };
        return adaptive_simpson(f, 0.0, theta1, tol) / p_;
    }
    auto f = [&](double x) { return std::pow(x, k) * pdf(x); };
    // the mass above tau lives within a few multiples of 1/sqrt(d) of tau;
    // seed the subdivision there so the adaptive pass converges quickly
    double w = 1.0 / std::sqrt(static_cast<double>(d_));
    std::vector<double> pts = {tau_};
    for (double m : {2.0, 5.0, 10.0, 20.0, 40.0}) {
        double x = tau_ + m * w;
        if (x < 1.0) pts.push_back(x);
    }
    pts.push_back(1.0);
    double total = 0.0;
    double seg_tol = tol / static_cast<double>(pts.size());
    for (std::size_t i = 0; i + 1 < pts.size(); i++) {
        total += adaptive_simpson(f, pts[i], pts[i + 1], seg_tol);
    }
    return total / p_;
}

double SphericalLaw::interval_mass(double delta) const {
    if (delta < 0.0) throw std::domain_error("interval_mass: delta must be >= 0");
    return cdf(std::min(1.0, tau_ + delta)) - cdf(std::max(-1.0, tau_ - delta));
}

double SphericalLaw::sample_coordinate(RngStream& rng) const {
    return quantile(rng.uniform_open());
}

Eigen::VectorXd SphericalLaw::sample_sphere(RngStream& rng) const {
    Eigen::VectorXd v(d_);
    sample_sphere(rng, v);
    return v;
}

void SphericalLaw::sample_sphere(RngStream& rng, Eigen::Ref<Eigen::VectorXd> out) const {
    if (out.size() != d_) throw std::domain_error("sample_sphere: wrong output size");
    for (;;) {
        for (int i = 0; i < d_; i++) out[i] = rng.normal();
        double nrm = out.norm();
        if (nrm > 1e-150) {
            out /= nrm;
            return;
        }
    }
}

double tau_threshold(int d, double p, double cdf_tol) {
    return SphericalLaw(d, p, cdf_tol).tau();
}

}  // namespace rgg
