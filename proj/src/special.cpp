#include "rggcouple/special.hpp"

#include <cmath>

#include "rggcouple/errors.hpp"

namespace rgg {

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace {

// Continued fraction for the incomplete beta, evaluated with the modified
// Lentz scheme. Valid for x < (a+1)/(a+b+2); the caller applies the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) otherwise.
double betacf(double a, double b, double x) {
    // symmetric parameters in the tens of thousands (degree ~1e5 laws) need
    // a few thousand terms when x sits close to the a/(a+b) crossover
    constexpr int kMaxIter = 20000;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; m++) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw NumericalError("ibeta continued fraction did not converge");
}

}  // namespace

double ibeta_reg(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw NumericalError("ibeta: a,b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double lbt = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    double bt = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * betacf(a, b, x) / a;
    }
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

}  // namespace rgg
