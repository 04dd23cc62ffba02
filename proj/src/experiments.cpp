#include "rggcouple/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rggcouple/coupling.hpp"
#include "rggcouple/errors.hpp"
#include "rggcouple/graphstats.hpp"
#include "rggcouple/parallel.hpp"
#include "rggcouple/robust_test.hpp"
#include "rggcouple/sphere_law.hpp"
#include "rggcouple/stats.hpp"

namespace rgg {

std::string property_name(ThresholdProperty p) {
    return p == ThresholdProperty::kConnectivity ? "connectivity" : "min_degree_ge_1";
}
std::string model_name(ThresholdModel m) {
    return m == ThresholdModel::kEr ? "er" : "rgg";
}
ThresholdProperty property_from_name(const std::string& s) {
    if (s == "connectivity") return ThresholdProperty::kConnectivity;
    if (s == "min_degree_ge_1") return ThresholdProperty::kMinDegree1;
    throw FormatError("unknown property '" + s + "'");
}
ThresholdModel model_from_name(const std::string& s) {
    if (s == "er") return ThresholdModel::kEr;
    if (s == "rgg") return ThresholdModel::kRgg;
    throw FormatError("unknown model '" + s + "'");
}

Eigen::MatrixXd sample_gram_wishart(RngStream& rng, int n, int d) {
    if (n < 1) throw std::domain_error("sample_gram_wishart: n < 1");
    if (d < n) throw std::domain_error("sample_gram_wishart: needs d >= n");
    // Upper-triangular factor R of the Gaussian Gram matrix: R_jj^2 is
    // chi-square with d-j degrees of freedom (0-based column j), entries
    // above the diagonal are standard normal.
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) r(i, j) = rng.normal();
        r(j, j) = std::sqrt(rng.chi_square(static_cast<double>(d - j)));
    }
    Eigen::MatrixXd w(n, n);
    w.noalias() = r.transpose() * r;
    Eigen::VectorXd inv_norm = w.diagonal().array().sqrt().inverse();
    Eigen::MatrixXd gram = inv_norm.asDiagonal() * w * inv_norm.asDiagonal();
    gram.diagonal().setOnes();
    return gram;
}

Graph rgg_from_gram(const Eigen::MatrixXd& gram, double tau) {
    if (gram.rows() != gram.cols()) throw std::domain_error("rgg_from_gram: not square");
    int n = static_cast<int>(gram.rows());
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (gram(i, j) >= tau) g.set_edge(i, j, true);
    return g;
}

namespace {

bool holds(ThresholdProperty prop, const Graph& g) {
    return prop == ThresholdProperty::kConnectivity ? connectivity(g)
                                                    : min_degree(g) >= 1;
}

}  // namespace

ThresholdCurve run_threshold(ThresholdProperty prop, ThresholdModel model, int n, int d,
                             const std::vector<double>& p_grid, int trials,
                             std::uint64_t seed, int workers) {
    if (n < 2) throw std::domain_error("run_threshold: n < 2");
    if (trials < 20) throw std::domain_error("run_threshold: trials < 20");
    if (p_grid.empty()) throw std::domain_error("run_threshold: empty grid");
    if (!std::is_sorted(p_grid.begin(), p_grid.end()))
        throw std::domain_error("run_threshold: grid not sorted");
    for (double p : p_grid)
        if (!(p > 0.0 && p <= 0.5))
            throw std::domain_error("run_threshold: grid point outside (0, 1/2]");
    if (model == ThresholdModel::kRgg && d < 2)
        throw std::domain_error("run_threshold: geometric model needs d >= 2");

    const int k = static_cast<int>(p_grid.size());
    std::vector<double> taus;
    if (model == ThresholdModel::kRgg) {
        taus.reserve(static_cast<std::size_t>(k));
        for (double p : p_grid) taus.push_back(tau_threshold(d, p));
    }

    const std::uint64_t model_tag = model == ThresholdModel::kEr ? 0u : 1u;
    auto one_trial = [&](int t) -> std::vector<char> {
        RngStream rs = derive_stream(
            seed, {stream::threshold_exp, model_tag, static_cast<std::uint64_t>(t)});
        std::vector<char> hit(static_cast<std::size_t>(k), 0);
        if (model == ThresholdModel::kEr) {
            // one uniform per pair, reused across the whole grid
            std::vector<double> u(pair_index(n, n - 2, n - 1) + 1);
            for (auto& x : u) x = rs.uniform();
            for (int gi = 0; gi < k; ++gi) {
                Graph g(n);
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (u[pair_index(n, i, j)] < p_grid[static_cast<std::size_t>(gi)])
                            g.set_edge(i, j, true);
                hit[static_cast<std::size_t>(gi)] = holds(prop, g) ? 1 : 0;
            }
        } else {
            Eigen::MatrixXd gram;
            if (d >= n) {
                gram = sample_gram_wishart(rs, n, d);
            } else {
                SphericalLaw law(d, p_grid.front());
                Eigen::MatrixXd v(d, n);
                for (int c = 0; c < n; ++c) {
                    Eigen::VectorXd col = law.sample_sphere(rs);
                    v.col(c) = col;
                }
                gram.noalias() = v.transpose() * v;
            }
            for (int gi = 0; gi < k; ++gi) {
                Graph g = rgg_from_gram(gram, taus[static_cast<std::size_t>(gi)]);
                hit[static_cast<std::size_t>(gi)] = holds(prop, g) ? 1 : 0;
            }
        }
        return hit;
    };

    std::vector<std::vector<char>> results = run_trials(trials, workers, one_trial);

    ThresholdCurve curve;
    curve.property = property_name(prop);
    curve.model = model_name(model);
    curve.n = n;
    curve.d = model == ThresholdModel::kRgg ? d : 0;
    curve.p_grid = p_grid;
    curve.trials = trials;
    curve.f_raw.assign(static_cast<std::size_t>(k), 0.0);
    for (const auto& hit : results)
        for (int gi = 0; gi < k; ++gi)
            curve.f_raw[static_cast<std::size_t>(gi)] += hit[static_cast<std::size_t>(gi)];
    for (auto& f : curve.f_raw) f /= trials;

    curve.f_iso = isotonic_fit(curve.f_raw);
    for (auto& f : curve.f_iso) f = std::clamp(f, 0.0, 1.0);

    curve.p_c_ok = invert_monotone(curve.p_grid, curve.f_iso, 0.5, &curve.p_c);
    double lo = 0.0, hi = 0.0;
    bool lo_ok = invert_monotone(curve.p_grid, curve.f_iso, 0.1, &lo);
    bool hi_ok = invert_monotone(curve.p_grid, curve.f_iso, 0.9, &hi);
    curve.window_ok = lo_ok && hi_ok;
    if (curve.window_ok) curve.window = hi - lo;
    return curve;
}

FkgEstimate run_fkg(std::uint64_t seed, int d, long long n_samples) {
    if (d < 3) throw std::domain_error("run_fkg: d < 3");
    if (n_samples < 100000) throw std::domain_error("run_fkg: needs N >= 1e5");

    SphericalLaw law(d, 0.5);
    const double tau = law.tau();
    RngStream rs = derive_stream(seed, {stream::fkg});

    FkgEstimate est;
    est.d = d;
    est.n_samples = n_samples;

    Eigen::VectorXd v1(d), v2(d), v3(d);
    for (long long s = 0; s < n_samples; ++s) {
        law.sample_sphere(rs, v1);
        law.sample_sphere(rs, v2);
        law.sample_sphere(rs, v3);
        int k = (v1.dot(v2) >= tau ? 1 : 0) + (v1.dot(v3) >= tau ? 1 : 0) +
                (v2.dot(v3) >= tau ? 1 : 0);
        ++est.counts[k];
    }

    const double nn = static_cast<double>(n_samples);
    const double choose[4] = {1.0, 3.0, 3.0, 1.0};
    double p_hat[4];
    for (int k = 0; k < 4; ++k) {
        p_hat[k] = static_cast<double>(est.counts[k]) / nn;
        est.mu[k] = p_hat[k] / choose[k];
        est.se[k] = std::sqrt(p_hat[k] * (1.0 - p_hat[k]) / nn) / choose[k];
    }
    est.identity_sum = p_hat[0] + p_hat[1] + p_hat[2] + p_hat[3];

    est.a_hat = est.mu[3] - 0.125;
    est.a_se = est.se[3];

    est.gap = est.mu[1] * est.mu[1] - est.mu[2] * est.mu[0];
    // gradient of the gap in the class probabilities P_k
    double grad[4] = {-p_hat[2] / 3.0, 2.0 * p_hat[1] / 9.0, -p_hat[0] / 3.0, 0.0};
    double var = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double cov = ((a == b ? p_hat[a] : 0.0) - p_hat[a] * p_hat[b]) / nn;
            var += grad[a] * grad[b] * cov;
        }
    est.gap_se = std::sqrt(std::max(var, 0.0));
    return est;
}

ScalingTable run_scaling(std::uint64_t seed, int n, double p,
                         const std::vector<int>& d_list, int trials, int workers) {
    if (d_list.empty()) throw std::domain_error("run_scaling: empty d list");
    if (trials < 1) throw std::domain_error("run_scaling: trials < 1");

    ScalingTable table;
    table.n = n;
    table.p = p;
    table.trials = trials;

    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    struct TrialOut {
        double fragile_frac;
        double disagree_frac;
        double drift_max;
    };

    // trial t reuses the same ER graph and flip bits across dimensions, so
    // drift maxima at different d are paired comparisons
    std::vector<std::vector<TrialOut>> per_d;
    for (std::size_t di = 0; di < d_list.size(); ++di) {
        int d = d_list[di];
        auto one_trial = [&, d](int t) -> TrialOut {
            RngStream er_rs =
                derive_stream(seed, {stream::scaling, 0, static_cast<std::uint64_t>(t)});
            Graph h = sample_er(er_rs, n, p);
            CouplingConfig cfg;
            cfg.n = n;
            cfg.d = d;
            cfg.p = p;
            cfg.record_drift = true;
            cfg.margin.kind = MarginRule::kExplicit;
            cfg.margin.value = 0.0;
            RngStream rs =
                derive_stream(seed, {stream::scaling, 1, static_cast<std::uint64_t>(t),
                                     static_cast<std::uint64_t>(d)});
            CouplingOutput out = couple(rs, h, cfg);
            DriftSummary ds = drift_summary(out);
            TrialOut res;
            res.drift_max = ds.max;
            res.fragile_frac = static_cast<double>(fragile_pairs(out, ds.max).size()) / pairs;
            res.disagree_frac = static_cast<double>(out.disagreements.size()) / pairs;
            return res;
        };
        per_d.push_back(run_trials(trials, workers, one_trial));
    }

    for (std::size_t di = 0; di < d_list.size(); ++di) {
        ScalingRow row;
        row.d = d_list[di];
        double drift_max = 0.0;
        for (const TrialOut& t : per_d[di]) {
            row.fragile_fraction += t.fragile_frac;
            row.disagreement_fraction += t.disagree_frac;
            drift_max = std::max(drift_max, t.drift_max);
        }
        row.fragile_fraction /= trials;
        row.disagreement_fraction /= trials;
        row.max_drift = drift_max;
        table.rows.push_back(row);
    }

    if (table.rows.size() >= 2) {
        std::vector<double> lx, ly;
        for (const ScalingRow& row : table.rows) {
            if (row.fragile_fraction > 0.0) {
                lx.push_back(std::log(static_cast<double>(row.d)));
                ly.push_back(std::log(row.fragile_fraction));
            }
        }
        if (lx.size() >= 2) table.slope = ls_slope(lx, ly);

        std::size_t lo_i = 0, hi_i = 0;
        for (std::size_t di = 1; di < d_list.size(); ++di) {
            if (d_list[di] < d_list[lo_i]) lo_i = di;
            if (d_list[di] > d_list[hi_i]) hi_i = di;
        }
        int ordered = 0;
        for (int t = 0; t < trials; ++t)
            if (per_d[hi_i][static_cast<std::size_t>(t)].drift_max <
                per_d[lo_i][static_cast<std::size_t>(t)].drift_max)
                ++ordered;
        table.drift_order_fraction = static_cast<double>(ordered) / trials;
    }
    return table;
}

RocTable run_roc(std::uint64_t seed, const std::string& decider,
                 const std::string& adversary, int n, double p, int d, double eps,
                 int trials, int workers) {
    if (trials < 2 || trials % 2 != 0)
        throw std::domain_error("run_roc: trials must be even and >= 2");
    if (decider != "witness" && decider != "triangle" && decider != "spectral")
        throw FormatError("run_roc: unknown decider '" + decider + "'");
    if (adversary != "none" && adversary != "clique" && adversary != "random" &&
        adversary != "coupling")
        throw FormatError("run_roc: unknown adversary '" + adversary + "'");

    AdversaryBudget budget(eps, n, p);

    // per-decider calibration, shared across trials
    WitnessCalibration wit_cal;
    double tri_threshold = 0.0;
    if (decider == "witness") {
        wit_cal = calibrate_witness(derive_seed(seed, {stream::roc, 100}), n, p, d, eps);
    } else if (decider == "triangle") {
        tri_threshold =
            0.5 * triangle_rgg_mean(derive_seed(seed, {stream::roc, 101}), n, p, d, 20);
    }

    const int half = trials / 2;
    auto one_trial = [&](int t) -> char {
        bool geometric_side = t < half;
        RngStream sample_rs =
            derive_stream(seed, {stream::roc, 0, static_cast<std::uint64_t>(t)});
        Graph g = geometric_side ? sample_rgg(sample_rs, n, d, p).graph
                                 : sample_er(sample_rs, n, p);

        RngStream adv_rs =
            derive_stream(seed, {stream::roc, 1, static_cast<std::uint64_t>(t)});
        if (adversary == "clique") {
            g = adversary_clique(adv_rs, g, budget.budget);
        } else if (adversary == "random") {
            g = adversary_random(adv_rs, g, budget.budget);
        } else if (adversary == "coupling") {
            CouplingConfig cfg;
            cfg.n = n;
            cfg.d = d;
            cfg.p = p;
            cfg.record_drift = false;
            cfg.margin.kind = MarginRule::kExplicit;
            cfg.margin.value = 0.0;
            g = adversary_coupling(adv_rs, g, cfg);
        }

        Decision dec;
        if (decider == "witness") {
            dec = decide_witness(g, p, d, wit_cal);
        } else if (decider == "triangle") {
            dec = decide_triangle(g, p, tri_threshold);
        } else {
            dec = decide_spectral(g, p, d);
        }
        return dec.is_rgg ? 1 : 0;
    };

    std::vector<char> said_rgg = run_trials(trials, workers, one_trial);

    RocTable table;
    table.decider = decider;
    table.adversary = adversary;
    table.n = n;
    table.p = p;
    table.d = d;
    table.eps = eps;
    table.trials = trials;
    for (int t = 0; t < trials; ++t) {
        bool geometric_side = t < half;
        bool called = said_rgg[static_cast<std::size_t>(t)] != 0;
        if (geometric_side && called) ++table.tp;
        if (geometric_side && !called) ++table.fn;
        if (!geometric_side && !called) ++table.tn;
        if (!geometric_side && called) ++table.fp;
    }
    table.accuracy = static_cast<double>(table.tp + table.tn) / trials;
    return table;
}

void write_threshold_csv(const ThresholdCurve& curve, std::ostream& out) {
    out << "p,f_raw,f_iso\n";
    char buf[256];
    for (std::size_t i = 0; i < curve.p_grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", curve.p_grid[i],
                      curve.f_raw[i], curve.f_iso[i]);
        out << buf;
    }
    if (!out) throw FormatError("threshold csv: write failed");
}

void write_fkg_csv(const FkgEstimate& est, std::ostream& out) {
    out << "stat,value,se\n";
    char buf[256];
    for (int k = 0; k < 4; ++k) {
        std::snprintf(buf, sizeof(buf), "mu%d,%.17g,%.17g\n", k, est.mu[k], est.se[k]);
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "a_hat,%.17g,%.17g\n", est.a_hat, est.a_se);
    out << buf;
    std::snprintf(buf, sizeof(buf), "gap,%.17g,%.17g\n", est.gap, est.gap_se);
    out << buf;
    std::snprintf(buf, sizeof(buf), "identity_sum,%.17g,0\n", est.identity_sum);
    out << buf;
    if (!out) throw FormatError("fkg csv: write failed");
}

void write_scaling_csv(const ScalingTable& table, std::ostream& out) {
    out << "d,fragile_fraction,disagreement_fraction,max_drift\n";
    char buf[256];
    for (const ScalingRow& row : table.rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", row.d,
                      row.fragile_fraction, row.disagreement_fraction, row.max_drift);
        out << buf;
    }
    if (!out) throw FormatError("scaling csv: write failed");
}

void write_roc_csv(const RocTable& table, std::ostream& out) {
    out << "decider,adversary,n,p,d,epsilon,trials,tp,fp,tn,fn,accuracy\n";
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.17g,%d,%.17g,%d,%d,%d,%d,%d,%.17g\n",
                  table.decider.c_str(), table.adversary.c_str(), table.n, table.p,
                  table.d, table.eps, table.trials, table.tp, table.fp, table.tn,
                  table.fn, table.accuracy);
    out << buf;
    if (!out) throw FormatError("roc csv: write failed");
}

}  // namespace rgg
