#pragma once

#include <Eigen/Core>

#include "rggcouple/rng.hpp"

namespace rgg {

// Closed interval [lo, hi] on the inner-product axis.
struct Interval {
    double lo;
    double hi;
};

// Law of a single coordinate <w, V> of a uniform unit vector V in dimension d
// (w any fixed unit vector), together with the connection threshold tau and
// the reflection maps used by the coupling.
//
// Density on [-1,1]:  c_d * (1 - x^2)^((d-3)/2),  c_d = Gamma(d/2) /
// (Gamma((d-1)/2) sqrt(pi)).  The CDF goes through the regularized incomplete
// beta of x^2 (the squared coordinate is Beta(1/2,(d-1)/2)), which stays
// accurate for d up to ~1e5.  The quantile inverts the CDF by bisection with
// a Newton polish; everything downstream states accuracy in terms of cdf_tol.
class SphericalLaw {
public:
    // d >= 2; p in (0, 1/2].  tau is fixed at construction: P[X >= tau] = p.
    SphericalLaw(int d, double p, double cdf_tol = 1e-12);

    int dim() const { return d_; }
    double p() const { return p_; }
    double tau() const { return tau_; }
    double cdf_tol() const { return cdf_tol_; }

    double pdf(double x) const;
    double cdf(double x) const;
    // q in (0,1)
    double quantile(double q) const;

    // Reflection of the coordinate across tau: monotone decreasing involution
    // mapping the law conditioned on [-1,tau] onto the law conditioned on
    // [tau,1] and back.  phi(-1)=1, phi(1)=-1, phi(tau)=tau.
    double phi(double x) const;

    // Interval variant: involution of [u,v] (u <= tau <= v, positive mass on
    // both sides) fixing tau and exchanging the endpoints, measure-preserving
    // between the conditional laws on [u,tau] and [tau,v].
    double phi_interval(double x, Interval iv) const;

    // P[X >= tau | X in [u,v]], the flip-bit rate that keeps interval
    // reflections distribution-neutral.
    double q_interval(Interval iv) const;

    // E[X^k | X >= tau], adaptive quadrature (k >= 0).
    double conditional_moment(int k) const;

    // P[tau - delta <= X <= tau + delta], delta >= 0.
    double interval_mass(double delta) const;

    double sample_coordinate(RngStream& rng) const;

    // Uniform unit vector in R^d (normalized Gaussians).
    Eigen::VectorXd sample_sphere(RngStream& rng) const;
    void sample_sphere(RngStream& rng, Eigen::Ref<Eigen::VectorXd> out) const;

private:
    int d_;
    double p_;
    double cdf_tol_;
    double tau_;
    double log_norm_;  // log c_d
};

// P[X >= tau] = p solved for tau.
double tau_threshold(int d, double p, double cdf_tol = 1e-12);

}  // namespace rgg
