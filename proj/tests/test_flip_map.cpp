#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rggcouple/flip_map.hpp"
#include "rggcouple/rng.hpp"
#include "rggcouple/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace rgg;

namespace {

Eigen::VectorXd basis(int d, int k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    v[k] = 1.0;
    return v;
}

// z with a prescribed inner product against the unit anchor a
Eigen::VectorXd with_inner(const Eigen::VectorXd& a, double x, RngStream& rng) {
    int d = static_cast<int>(a.size());
    Eigen::VectorXd w(d);
    for (int i = 0; i < d; i++) w[i] = rng.normal();
    w -= w.dot(a) * a;
    w /= w.norm();
    return x * a + std::sqrt(1.0 - x * x) * w;
}

}  // namespace

TEST_CASE("stretch and shift coefficients, closed cases") {
    // at p = 1/2 the swap map is negation, so the stretch vanishes
    SphericalLaw sym(16, 0.5);
    for (double x : {-0.7, -0.2, 0.0, 0.4, 0.8}) {
        CHECK(std::fabs(psi(sym, x)) <= 1e-9);
        CHECK(kappa(sym, x) == doctest::Approx(-2.0 * x).epsilon(1e-8));
    }
    // d=3, p=1/4, x=0: the swap lands at 2/3
    SphericalLaw law(3, 0.25);
    double ps = psi(law, 0.0);
    double kp = kappa(law, 0.0);
    CHECK(ps == doctest::Approx(std::sqrt(5.0) / 3.0 - 1.0).epsilon(1e-9));
    CHECK(kp == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    // consistency with the defining identities at generic points
    for (double x : {-0.9, -0.3, 0.2, 0.6, 0.95}) {
        double ph = law.phi(x);
        double want_psi = std::sqrt((1.0 - ph * ph) / (1.0 - x * x)) - 1.0;
        CHECK(psi(law, x) == doctest::Approx(want_psi).epsilon(1e-9));
        CHECK(kappa(law, x) ==
              doctest::Approx(ph - x - want_psi * x).epsilon(1e-9));
    }
    // fixed point of the swap leaves nothing to do
    CHECK(std::fabs(psi(law, law.tau())) <= 1e-9);
    CHECK(std::fabs(kappa(law, law.tau())) <= 1e-9);
}

TEST_CASE("coefficients reject the poles") {
    SphericalLaw law(8, 0.2);
    CHECK_THROWS_AS(psi(law, 1.0 - 1e-10), std::domain_error);
    CHECK_THROWS_AS(psi(law, -1.0 + 1e-10), std::domain_error);
    CHECK_THROWS_AS(kappa(law, 1.0), std::domain_error);
    Interval iv{law.tau() - 0.1, law.tau() + 0.1};
    CHECK_THROWS_AS(psi_interval(law, 1.0, iv), std::domain_error);
    CHECK_THROWS_AS(kappa_interval(law, -1.0, iv), std::domain_error);
}

TEST_CASE("no-op when the bit already matches") {
    SphericalLaw law(6, 0.3);
    RngStream rng(derive_seed(101, {1}));
    Eigen::VectorXd a = law.sample_sphere(rng);
    for (int i = 0; i < 200; i++) {
        Eigen::VectorXd z = law.sample_sphere(rng);
        Eigen::VectorXd before = z;
        bool b = z.dot(a) >= law.tau();
        FlipRecord rec = flip(law, a, z, b);
        CHECK(!rec.flipped);
        CHECK(rec.psi_val == 0.0);
        CHECK(rec.kappa_val == 0.0);
        CHECK((z - before).norm() == 0.0);
        CHECK(rec.pre_inner == rec.post_inner);
    }
}

TEST_CASE("forced flip lands on the requested side, always") {
    for (int d : {3, 8, 64}) {
        for (double p : {0.05, 0.25, 0.5}) {
            SphericalLaw law(d, p);
            RngStream rng(derive_seed(103, {static_cast<unsigned long long>(d),
                                            static_cast<unsigned long long>(p * 100)}));
            for (int i = 0; i < 2000; i++) {
                Eigen::VectorXd a = law.sample_sphere(rng);
                Eigen::VectorXd z = law.sample_sphere(rng);
                bool b = rng.uniform() < p;
                FlipRecord rec = flip(law, a, z, b);
                bool side = a.dot(z) >= law.tau();
                CHECK(side == b);
                CHECK(std::fabs(z.norm() - 1.0) <= 1e-12);
                CHECK(rec.post_inner == doctest::Approx(a.dot(z)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("flip moves only the anchor component") {
    SphericalLaw law(12, 0.2);
    RngStream rng(derive_seed(105, {1}));
    for (int i = 0; i < 300; i++) {
        Eigen::VectorXd a = law.sample_sphere(rng);
        Eigen::VectorXd z = law.sample_sphere(rng);
        Eigen::VectorXd z0 = z;
        FlipRecord rec = flip(law, a, z, !(z.dot(a) >= law.tau()));
        REQUIRE(rec.flipped);
        Eigen::VectorXd perp0 = z0 - z0.dot(a) * a;
        Eigen::VectorXd perp1 = z - z.dot(a) * a;
        // orthogonal part keeps its direction, scaled by a nonnegative factor
        double c = perp0.dot(perp1) / (perp0.norm() * perp1.norm());
        CHECK(c == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("flip from the equator at d=3") {
    SphericalLaw law(3, 0.25);
    RngStream rng(7);
    Eigen::VectorXd a = basis(3, 0);
    Eigen::VectorXd z = basis(3, 1);  // inner product 0, below tau = 1/2
    FlipRecord rec = flip(law, a, z, true);
    CHECK(rec.flipped);
    CHECK(rec.pre_inner == 0.0);
    CHECK(rec.post_inner == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(z[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(z[1] == doctest::Approx(std::sqrt(5.0) / 3.0).epsilon(1e-9));
    CHECK(z[2] == 0.0);
}

TEST_CASE("record reconstructs the move") {
    SphericalLaw law(10, 0.15);
    RngStream rng(derive_seed(107, {1}));
    for (int i = 0; i < 500; i++) {
        Eigen::VectorXd a = law.sample_sphere(rng);
        Eigen::VectorXd z = law.sample_sphere(rng);
        Eigen::VectorXd z0 = z;
        FlipRecord rec = flip(law, a, z, rng.uniform() < 0.5);
        if (!rec.flipped) continue;
        Eigen::VectorXd rebuilt = z0 + rec.psi_val * z0 + rec.kappa_val * a;
        rebuilt /= rebuilt.norm();
        CHECK((rebuilt - z).norm() <= 1e-9);
    }
}

TEST_CASE("flipping twice undoes the move") {
    SphericalLaw law(9, 0.2);
    RngStream rng(derive_seed(109, {1}));
    for (int i = 0; i < 500; i++) {
        Eigen::VectorXd a = law.sample_sphere(rng);
        Eigen::VectorXd z = law.sample_sphere(rng);
        Eigen::VectorXd z0 = z;
        bool b0 = z.dot(a) >= law.tau();
        flip(law, a, z, !b0);
        flip(law, a, z, b0);
        CHECK((z - z0).norm() <= 1e-8);
    }
}

TEST_CASE("forcing preserves the sphere law") {
    // anchor fixed, z uniform, bit Bernoulli(p): z' must again be uniform
    const int d = 16;
    const double p = 0.2;
    SphericalLaw law(d, p);
    const int n = 100000;
    RngStream rng(derive_seed(111, {2}));
    Eigen::VectorXd a = law.sample_sphere(rng);
    std::vector<Eigen::VectorXd> probes;
    for (int k = 0; k < 5; k++) probes.push_back(law.sample_sphere(rng));
    std::vector<double> along_a;
    std::vector<std::vector<double>> along_w(probes.size());
    along_a.reserve(n);
    int flips = 0;
    Eigen::VectorXd z(d);
    for (int i = 0; i < n; i++) {
        law.sample_sphere(rng, z);
        bool b = rng.uniform() < p;
        FlipRecord rec = flip(law, a, z, b);
        if (rec.flipped) flips++;
        along_a.push_back(z.dot(a));
        for (std::size_t k = 0; k < probes.size(); k++)
            along_w[k].push_back(z.dot(probes[k]));
    }
    auto cdf = [&](double x) { return law.cdf(x); };
    CHECK(ks_test(along_a, cdf).p_value > 1e-3);
    for (auto& coords : along_w) {
        CHECK(ks_test(coords, cdf).p_value > 1e-3);
    }
    // a flip happens iff bit and side disagree: rate 2p(1-p)
    double rate = 2.0 * p * (1.0 - p);
    double se = std::sqrt(rate * (1.0 - rate) / n);
    CHECK(std::fabs(static_cast<double>(flips) / n - rate) <= 4.0 * se);
}

TEST_CASE("requested bit frequency is the edge density") {
    const int d = 12;
    const double p = 0.3;
    SphericalLaw law(d, p);
    const int n = 100000;
    RngStream rng(derive_seed(113, {1}));
    Eigen::VectorXd a = law.sample_sphere(rng);
    int above = 0;
    Eigen::VectorXd z(d);
    for (int i = 0; i < n; i++) {
        law.sample_sphere(rng, z);
        flip(law, a, z, rng.uniform() < p);
        if (z.dot(a) >= law.tau()) above++;
    }
    double se = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::fabs(static_cast<double>(above) / n - p) <= 4.0 * se);
}

TEST_CASE("interval flip acts only inside the interval") {
    SphericalLaw law(14, 0.25);
    double tau = law.tau();
    Interval iv{tau - 0.08, tau + 0.06};
    RngStream rng(derive_seed(115, {1}));
    Eigen::VectorXd a = law.sample_sphere(rng);
    int touched = 0;
    for (int i = 0; i < 3000; i++) {
        Eigen::VectorXd z = law.sample_sphere(rng);
        Eigen::VectorXd z0 = z;
        double x = z.dot(a);
        bool b = rng.uniform() < 0.5;
        FlipRecord rec = flip_interval(law, a, z, b, iv);
        if (x < iv.lo || x > iv.hi) {
            CHECK(!rec.flipped);
            CHECK((z - z0).norm() == 0.0);
        } else {
            touched++;
            double y = z.dot(a);
            CHECK((y >= tau) == b);
            CHECK(y >= iv.lo - 1e-9);
            CHECK(y <= iv.hi + 1e-9);
            CHECK(std::fabs(z.norm() - 1.0) <= 1e-12);
        }
    }
    CHECK(touched > 0);
}

TEST_CASE("interval flip with neutral bits preserves the sphere law") {
    const int d = 16;
    const double p = 0.2;
    SphericalLaw law(d, p);
    double tau = law.tau();
    // balanced interval: equal coordinate mass on both sides of tau
    double lo = law.quantile(law.cdf(tau) - 0.05);
    double hi = law.quantile(law.cdf(tau) + 0.05);
    Interval iv{lo, hi};
    double q = law.q_interval(iv);
    CHECK(q == doctest::Approx(0.5).epsilon(1e-6));
    const int n = 100000;
    RngStream rng(derive_seed(117, {1}));
    Eigen::VectorXd a = law.sample_sphere(rng);
    std::vector<double> along_a;
    along_a.reserve(n);
    Eigen::VectorXd z(d);
    for (int i = 0; i < n; i++) {
        law.sample_sphere(rng, z);
        flip_interval(law, a, z, rng.uniform() < q, iv);
        along_a.push_back(z.dot(a));
    }
    CHECK(ks_test(along_a, [&](double x) { return law.cdf(x); }).p_value > 1e-3);
}

TEST_CASE("exact threshold point stays put") {
    SphericalLaw law(5, 0.3);
    RngStream rng(119);
    Eigen::VectorXd a = law.sample_sphere(rng);
    Eigen::VectorXd z = with_inner(a, law.tau(), rng);
    double x = z.dot(a);
    // construction puts the inner product within rounding of tau; the bit
    // matching its side must be a no-op
    FlipRecord rec = flip(law, a, z, x >= law.tau());
    CHECK(!rec.flipped);
}

TEST_CASE("stretch magnitude scales like the threshold band") {
    // over the coordinate bulk, |psi| stays near tau^2-scale and |kappa|
    // near tau-scale; the scaled maxima should be stable across dimension
    const double p = 0.1;
    const double n_for_log = 1000.0;
    std::vector<double> c_psi, c_kappa;
    for (int d : {64, 256, 1024}) {
        SphericalLaw law(d, p);
        RngStream rng(derive_seed(121, {static_cast<unsigned long long>(d)}));
        double worst_psi = 0.0, worst_kappa = 0.0;
        for (int i = 0; i < 20000; i++) {
            double x = law.sample_coordinate(rng);
            worst_psi = std::max(worst_psi, std::fabs(psi(law, x)));
            worst_kappa = std::max(worst_kappa, std::fabs(kappa(law, x)));
        }
        double dd = static_cast<double>(d);
        c_psi.push_back(worst_psi * dd / std::log(n_for_log));
        c_kappa.push_back(worst_kappa * std::sqrt(dd / std::log(n_for_log)));
    }
    double lo_p = *std::min_element(c_psi.begin(), c_psi.end());
    double hi_p = *std::max_element(c_psi.begin(), c_psi.end());
    double lo_k = *std::min_element(c_kappa.begin(), c_kappa.end());
    double hi_k = *std::max_element(c_kappa.begin(), c_kappa.end());
    CHECK(hi_p <= 3.0 * lo_p);
    CHECK(hi_k <= 3.0 * lo_k);
}

TEST_CASE("interval coefficients shrink with the interval") {
    const int d = 256;
    const double p = 0.1;
    SphericalLaw law(d, p);
    double tau = law.tau();
    std::vector<double> c_psi, c_kappa;
    for (double w : {0.02, 0.04, 0.08}) {
        Interval iv{tau - w, tau + w};
        double worst_psi = 0.0, worst_kappa = 0.0;
        for (int i = 0; i <= 200; i++) {
            double x = iv.lo + 2.0 * w * i / 200.0;
            if (std::fabs(x) > 1.0 - 1e-6) continue;
            worst_psi = std::max(worst_psi, std::fabs(psi_interval(law, x, iv)));
            worst_kappa = std::max(worst_kappa, std::fabs(kappa_interval(law, x, iv)));
            // the swap never leaves the interval
            CHECK(std::fabs(law.phi_interval(x, iv) - x) <= 2.0 * w + 1e-12);
        }
        // the stretch scale carries a factor tau + w from the midpoint of
        // the band, on top of the width itself
        c_psi.push_back(worst_psi / (w * (tau + w)));
        c_kappa.push_back(worst_kappa / (2.0 * w));
    }
    double lo_p = *std::min_element(c_psi.begin(), c_psi.end());
    double hi_p = *std::max_element(c_psi.begin(), c_psi.end());
    double lo_k = *std::min_element(c_kappa.begin(), c_kappa.end());
    double hi_k = *std::max_element(c_kappa.begin(), c_kappa.end());
    CHECK(hi_p <= 3.0 * lo_p);
    CHECK(hi_k <= 3.0 * lo_k);
}

TEST_CASE("flip input validation") {
    SphericalLaw law(6, 0.2);
    RngStream rng(123);
    Eigen::VectorXd a = law.sample_sphere(rng);
    Eigen::VectorXd z = law.sample_sphere(rng);
    Eigen::VectorXd long_a = 1.1 * a;
    CHECK_THROWS_AS(flip(law, long_a, z, true), std::domain_error);
    Eigen::VectorXd short_z = 0.9 * z;
    CHECK_THROWS_AS(flip(law, a, short_z, true), std::domain_error);
    Eigen::VectorXd other(7);
    other.setZero();
    other[0] = 1.0;
    CHECK_THROWS_AS(flip(law, a, other, true), std::domain_error);
}
