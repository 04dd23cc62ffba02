#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rggcouple/graph.hpp"
#include "rggcouple/rng.hpp"

namespace rgg {

enum class ThresholdProperty { kConnectivity, kMinDegree1 };
enum class ThresholdModel { kEr, kRgg };

std::string property_name(ThresholdProperty p);
std::string model_name(ThresholdModel m);
ThresholdProperty property_from_name(const std::string& s);
ThresholdModel model_from_name(const std::string& s);

// Monte Carlo curve p -> P(property), with the critical point f^{-1}(1/2)
// and the width f^{-1}(0.9) - f^{-1}(0.1), both read off the isotonic fit by
// linear interpolation. p_c_ok / window_ok record whether the levels were
// bracketed; the curve is returned either way.
struct ThresholdCurve {
    std::string property;
    std::string model;
    int n = 0;
    int d = 0;  // 0 for ER
    std::vector<double> p_grid;
    int trials = 0;
    std::vector<double> f_raw;
    std::vector<double> f_iso;
    double p_c = 0.0;
    bool p_c_ok = false;
    double window = 0.0;
    bool window_ok = false;
};

// One shared sample per trial is thresholded at every grid point (uniforms
// against p for ER, Gram entries against tau(d, p) for the geometric model),
// so each trial contributes a monotone step function and the averaged curve
// is monotone before any fitting.
ThresholdCurve run_threshold(ThresholdProperty prop, ThresholdModel model, int n, int d,
                             const std::vector<double>& p_grid, int trials,
                             std::uint64_t seed, int workers = 1);

// Gram matrix of n i.i.d. uniform unit vectors in dimension d, sampled
// through the triangular factor of their Gaussian Gram matrix: O(n^2) draws
// and O(n^3) flops, no d-dimensional vectors. Requires d >= n.
Eigen::MatrixXd sample_gram_wishart(RngStream& rng, int n, int d);
Graph rgg_from_gram(const Eigen::MatrixXd& gram, double tau);

// Triple statistics at p = 1/2 on three uniform vertices. mu[k] estimates
// the probability of one fixed configuration with k edges; class counts
// relate through P_k = C(3,k) mu(k).
struct FkgEstimate {
    int d = 0;
    long long n_samples = 0;
    long long counts[4] = {0, 0, 0, 0};
    double mu[4] = {0, 0, 0, 0};
    double se[4] = {0, 0, 0, 0};
    double a_hat = 0.0;   // mu[3] - 1/8
    double a_se = 0.0;
    double gap = 0.0;     // mu[1]^2 - mu[2]*mu[0]
    double gap_se = 0.0;  // delta method over the multinomial counts
    double identity_sum = 0.0;  // sum_k C(3,k) mu[k], equals 1 by construction
};

FkgEstimate run_fkg(std::uint64_t seed, int d, long long n_samples);

// Fragile/disagreement fractions (of C(n,2)) per dimension, with the margin
// set to each run's own observed max drift, plus the log-log slope of the
// fragile fraction against d.
struct ScalingRow {
    int d = 0;
    double fragile_fraction = 0.0;
    double disagreement_fraction = 0.0;
    double max_drift = 0.0;
};
struct ScalingTable {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    std::vector<ScalingRow> rows;
    double slope = 0.0;
    // fraction of paired trials where drift max at the largest d undercuts
    // drift max at the smallest d
    double drift_order_fraction = 0.0;
};

ScalingTable run_scaling(std::uint64_t seed, int n, double p,
                         const std::vector<int>& d_list, int trials, int workers = 1);

// Balanced decision bench: even trials, first half geometric, second half
// ER, the adversary applied to both sides.
struct RocTable {
    std::string decider;
    std::string adversary;
    int n = 0;
    double p = 0.0;
    int d = 0;
    double eps = 0.0;
    int trials = 0;
    int tp = 0;  // geometric sample decided geometric
    int fn = 0;
    int tn = 0;  // null sample decided null
    int fp = 0;
    double accuracy = 0.0;
};

RocTable run_roc(std::uint64_t seed, const std::string& decider,
                 const std::string& adversary, int n, double p, int d, double eps,
                 int trials, int workers = 1);

void write_threshold_csv(const ThresholdCurve& curve, std::ostream& out);
void write_fkg_csv(const FkgEstimate& est, std::ostream& out);
void write_scaling_csv(const ScalingTable& table, std::ostream& out);
void write_roc_csv(const RocTable& table, std::ostream& out);

}  // namespace rgg
