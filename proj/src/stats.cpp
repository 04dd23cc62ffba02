#include "rggcouple/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgg {

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 200; k++) {
        double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-18) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> values, const std::function<double(double)>& cdf) {
    if (values.size() < 2) throw std::domain_error("ks_test: need at least 2 values");
    std::sort(values.begin(), values.end());
    int n = static_cast<int>(values.size());
    double d = 0.0;
    for (int i = 0; i < n; i++) {
        double f = cdf(values[i]);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(f - lo), std::fabs(hi - f)));
    }
    double sn = std::sqrt(static_cast<double>(n));
    double lambda = (sn + 0.12 + 0.11 / sn) * d;
    return {d, kolmogorov_q(lambda), n};
}

KsResult ks_test_two(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 2 || b.size() < 2) throw std::domain_error("ks_test_two: need >= 2 per sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) i++;
        while (j < b.size() && b[j] <= x) j++;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    double ne = na * nb / (na + nb);
    double sn = std::sqrt(ne);
    double lambda = (sn + 0.12 + 0.11 / sn) * d;
    return {d, kolmogorov_q(lambda), static_cast<int>(ne)};
}

std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& w) {
    std::size_t n = y.size();
    std::vector<double> weights = w.empty() ? std::vector<double>(n, 1.0) : w;
    if (weights.size() != n) throw std::domain_error("isotonic_fit: weight size mismatch");
    // block-merging PAV
    std::vector<double> val, wt;
    std::vector<std::size_t> count;
    val.reserve(n); wt.reserve(n); count.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        val.push_back(y[i]);
        wt.push_back(weights[i]);
        count.push_back(1);
        while (val.size() >= 2 && val[val.size() - 2] > val[val.size() - 1]) {
            double tw = wt[wt.size() - 2] + wt[wt.size() - 1];
            double tv = (val[val.size() - 2] * wt[wt.size() - 2] +
                         val[val.size() - 1] * wt[wt.size() - 1]) / tw;
            std::size_t tc = count[count.size() - 2] + count[count.size() - 1];
            val.pop_back(); wt.pop_back(); count.pop_back();
            val.back() = tv; wt.back() = tw; count.back() = tc;
        }
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t bidx = 0; bidx < val.size(); bidx++) {
        for (std::size_t r = 0; r < count[bidx]; r++) out.push_back(val[bidx]);
    }
    return out;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::domain_error("mean: empty");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::domain_error("variance: need n >= 2");
    double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::domain_error("ls_slope: bad sizes");
    double mx = mean(x), my = mean(y);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); i++) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    if (den == 0.0) throw std::domain_error("ls_slope: degenerate x");
    return num / den;
}

bool invert_monotone(const std::vector<double>& grid, const std::vector<double>& f,
                     double level, double* out) {
    if (grid.size() != f.size() || grid.size() < 2)
        throw std::domain_error("invert_monotone: bad sizes");
    for (std::size_t i = 0; i + 1 < grid.size(); i++) {
        double a = f[i], b = f[i + 1];
        if ((a <= level && level <= b)) {
            if (b == a) { *out = 0.5 * (grid[i] + grid[i + 1]); return true; }
            *out = grid[i] + (level - a) / (b - a) * (grid[i + 1] - grid[i]);
            return true;
        }
    }
    // level below/above the whole curve
    if (!f.empty() && level <= f.front()) { *out = grid.front(); return false; }
    if (!f.empty() && level >= f.back()) { *out = grid.back(); return false; }
    return false;
}

}  // namespace rgg
