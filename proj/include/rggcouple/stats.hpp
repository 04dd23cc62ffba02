#pragma once

#include <functional>
#include <vector>

namespace rgg {

struct KsResult {
    double stat;     // sup |F_hat - F|
    double p_value;  // asymptotic, with the usual finite-sample correction
    int n;           // sample size (effective size for two-sample)
};

// Survival function of the Kolmogorov distribution, Q(lambda) =
// 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

// One-sample KS test of `values` against the continuous CDF `cdf`.
KsResult ks_test(std::vector<double> values, const std::function<double(double)>& cdf);

// Two-sample KS test.
KsResult ks_test_two(std::vector<double> a, std::vector<double> b);

// Pool-adjacent-violators: least-squares non-decreasing fit of y with
// weights w (w empty => unit weights).
std::vector<double> isotonic_fit(const std::vector<double>& y,
                                 const std::vector<double>& w = {});

double mean(const std::vector<double>& v);
double variance(const std::vector<double>& v);  // unbiased, needs n >= 2

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

// Linear interpolation of the level crossing f(p) = level on a non-decreasing
// curve sampled at (grid, f). Returns false if the level is never bracketed.
bool invert_monotone(const std::vector<double>& grid, const std::vector<double>& f,
                     double level, double* out);

}  // namespace rgg
