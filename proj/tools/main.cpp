// Command-line front end. Every subcommand is deterministic in --seed; the
// optional --config file supplies values for flags not given on the command
// line (command line wins). Exit codes: 0 ok, 2 bad input or config, 3
// numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rggcouple/config.hpp"
#include "rggcouple/coupling.hpp"
#include "rggcouple/embedding.hpp"
#include "rggcouple/errors.hpp"
#include "rggcouple/experiments.hpp"
#include "rggcouple/graph.hpp"
#include "rggcouple/graphstats.hpp"
#include "rggcouple/recursive.hpp"
#include "rggcouple/robust_test.hpp"
#include "rggcouple/rng.hpp"
#include "rggcouple/sphere_law.hpp"

namespace {

using rgg::Config;

// Values not set on the command line fall back to the config file, then to
// the built-in default already sitting in the variable.
template <typename T>
void fill_int(const CLI::Option* opt, const Config& cfg, const std::string& key, T& out) {
    if (opt->count() == 0 && cfg.has(key)) out = static_cast<T>(cfg.get_int(key));
}
void fill_real(const CLI::Option* opt, const Config& cfg, const std::string& key,
               double& out) {
    if (opt->count() == 0 && cfg.has(key)) out = cfg.get_real(key);
}
void fill_string(const CLI::Option* opt, const Config& cfg, const std::string& key,
                 std::string& out) {
    if (opt->count() == 0 && cfg.has(key)) out = cfg.get_string(key);
}
void fill_flag(const CLI::Option* opt, const Config& cfg, const std::string& key,
               bool& out) {
    if (opt->count() == 0 && cfg.has(key)) out = cfg.get_flag(key);
}

void write_graph_or_stdout(const rgg::Graph& g, const std::string& path) {
    if (path.empty()) {
        rgg::write_graph_text(g, std::cout);
    } else {
        rgg::write_graph_file(g, path);
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw rgg::FormatError("cannot open output file '" + path + "'");
    return out;
}

std::vector<double> parse_real_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw rgg::FormatError("empty entry in list '" + csv + "'");
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw rgg::FormatError("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    for (double v : parse_real_list(csv)) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw rgg::FormatError("bad grid: need 0 < p-min < p-max and >= 2 points");
    std::vector<double> grid(static_cast<std::size_t>(points));
    double ratio = std::log(hi / lo);
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            lo * std::exp(ratio * i / static_cast<double>(points - 1));
    grid.back() = hi;
    return grid;
}

int run(int argc, char** argv) {
    CLI::App app{"spherical random geometric graph coupling toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file")
        ->configurable(false);

    // common knobs; each subcommand binds its own copies
    struct Common {
        int n = 100;
        double p = 0.1;
        int d = 64;
        std::uint64_t seed = 1;
        int trials = 20;
        int workers = 1;
        std::string out;
    };

    // ---- er-sample ----
    auto* er_cmd = app.add_subcommand("er-sample", "sample an ER(n,p) graph");
    Common er;
    auto* er_n = er_cmd->add_option("--n", er.n, "vertex count");
    auto* er_p = er_cmd->add_option("--p", er.p, "edge probability");
    auto* er_seed = er_cmd->add_option("--seed", er.seed, "master seed");
    auto* er_out = er_cmd->add_option("--out", er.out, "output graph file (default stdout)");

    // ---- rgg-sample ----
    auto* rgg_cmd = app.add_subcommand("rgg-sample", "sample a spherical RGG(n,p,d)");
    Common rg;
    std::string rgg_embedding_out;
    auto* rg_n = rgg_cmd->add_option("--n", rg.n, "vertex count");
    auto* rg_p = rgg_cmd->add_option("--p", rg.p, "edge probability");
    auto* rg_d = rgg_cmd->add_option("--d", rg.d, "sphere dimension");
    auto* rg_seed = rgg_cmd->add_option("--seed", rg.seed, "master seed");
    auto* rg_out = rgg_cmd->add_option("--out", rg.out, "output graph file (default stdout)");
    auto* rg_emb =
        rgg_cmd->add_option("--embedding-out", rgg_embedding_out, "latent vector file");

    // ---- couple ----
    auto* cpl_cmd =
        app.add_subcommand("couple", "run the coupling against an ER graph");
    Common cp;
    std::string cpl_in;
    double cpl_margin_c = 1.0;
    double cpl_margin = -1.0;
    auto* cp_n = cpl_cmd->add_option("--n", cp.n, "vertex count");
    auto* cp_p = cpl_cmd->add_option("--p", cp.p, "edge probability");
    auto* cp_d = cpl_cmd->add_option("--d", cp.d, "sphere dimension");
    auto* cp_seed = cpl_cmd->add_option("--seed", cp.seed, "master seed");
    auto* cp_in = cpl_cmd->add_option("--in", cpl_in, "ER graph file (default: sampled)");
    auto* cp_out = cpl_cmd->add_option("--out", cp.out, "realized graph file");
    auto* cp_mc = cpl_cmd->add_option("--margin-c", cpl_margin_c,
                                      "margin constant for the fragile band");
    auto* cp_m = cpl_cmd->add_option("--margin", cpl_margin,
                                     "explicit margin (overrides --margin-c)");

    // ---- recursive ----
    auto* rec_cmd = app.add_subcommand("recursive", "multi-round coupling");
    Common rc;
    int rec_rounds = 3;
    double rec_growth_c = 1.0;
    double rec_u1 = -1.0;
    bool rec_reuse = false;
    auto* rc_n = rec_cmd->add_option("--n", rc.n, "vertex count");
    auto* rc_p = rec_cmd->add_option("--p", rc.p, "edge probability");
    auto* rc_d = rec_cmd->add_option("--d", rc.d, "sphere dimension");
    auto* rc_seed = rec_cmd->add_option("--seed", rc.seed, "master seed");
    auto* rc_rounds = rec_cmd->add_option("--rounds", rec_rounds, "refinement rounds");
    auto* rc_growth = rec_cmd->add_option("--growth-c", rec_growth_c,
                                          "interval recursion constant");
    auto* rc_u1 = rec_cmd->add_option(
        "--u1", rec_u1, "round-1 upper margin (default: drift formula, c=2)");
    auto* rc_reuse = rec_cmd->add_flag("--reuse-h0", rec_reuse,
                                       "negative control: reuse round-0 bits");
    auto* rc_out = rec_cmd->add_option("--out", rc.out, "round report CSV file");

    // ---- test ----
    auto* tst_cmd = app.add_subcommand("test", "decide RGG vs null for a graph file");
    Common ts;
    std::string tst_in, tst_decider = "witness", tst_calibration;
    double tst_eps = 0.05;
    auto* ts_in = tst_cmd->add_option("--in", tst_in, "graph file to test")->required();
    auto* ts_p = tst_cmd->add_option("--p", ts.p, "edge probability");
    auto* ts_d = tst_cmd->add_option("--d", ts.d, "sphere dimension");
    auto* ts_seed = tst_cmd->add_option("--seed", ts.seed, "master seed");
    auto* ts_dec = tst_cmd->add_option("--decider", tst_decider,
                                       "witness | triangle | spectral");
    auto* ts_eps = tst_cmd->add_option("--eps", tst_eps, "corruption fraction");
    auto* ts_cal = tst_cmd->add_option("--calibration", tst_calibration,
                                       "calibration CSV (witness decider)");

    // ---- exp ----
    auto* exp_cmd = app.add_subcommand("exp", "experiment harness");
    exp_cmd->require_subcommand(1);

    auto* thr_cmd = exp_cmd->add_subcommand("threshold", "sharp-threshold curve");
    Common th;
    th.trials = 30;
    std::string thr_property = "connectivity", thr_model = "er", thr_grid;
    double thr_pmin = 0.004, thr_pmax = 0.04;
    int thr_points = 30;
    auto* th_prop = thr_cmd->add_option("--property", thr_property,
                                        "connectivity | min_degree_ge_1");
    auto* th_model = thr_cmd->add_option("--model", thr_model, "er | rgg");
    auto* th_n = thr_cmd->add_option("--n", th.n, "vertex count");
    auto* th_d = thr_cmd->add_option("--d", th.d, "sphere dimension (rgg model)");
    auto* th_seed = thr_cmd->add_option("--seed", th.seed, "master seed");
    auto* th_trials = thr_cmd->add_option("--trials", th.trials, "trials per grid point");
    auto* th_workers = thr_cmd->add_option("--workers", th.workers, "worker threads");
    auto* th_pmin = thr_cmd->add_option("--p-min", thr_pmin, "grid lower end");
    auto* th_pmax = thr_cmd->add_option("--p-max", thr_pmax, "grid upper end");
    auto* th_points = thr_cmd->add_option("--points", thr_points, "grid size");
    auto* th_grid = thr_cmd->add_option("--grid", thr_grid,
                                        "explicit comma-separated p grid");
    auto* th_out = thr_cmd->add_option("--out", th.out, "curve CSV file");

    auto* fkg_cmd = exp_cmd->add_subcommand("fkg", "triple statistics at p=1/2");
    Common fk;
    fk.d = 3;
    long long fkg_samples = 1000000;
    auto* fk_d = fkg_cmd->add_option("--d", fk.d, "sphere dimension");
    auto* fk_seed = fkg_cmd->add_option("--seed", fk.seed, "master seed");
    auto* fk_samples = fkg_cmd->add_option("--samples", fkg_samples, "triple count");
    auto* fk_out = fkg_cmd->add_option("--out", fk.out, "estimate CSV file");

    auto* scl_cmd = exp_cmd->add_subcommand("scaling", "fragile fraction vs dimension");
    Common sc;
    sc.n = 300;
    sc.p = 0.05;
    std::string scl_dlist = "1024,4096,16384";
    auto* sc_n = scl_cmd->add_option("--n", sc.n, "vertex count");
    auto* sc_p = scl_cmd->add_option("--p", sc.p, "edge probability");
    auto* sc_dlist = scl_cmd->add_option("--d-list", scl_dlist,
                                         "comma-separated dimensions");
    auto* sc_seed = scl_cmd->add_option("--seed", sc.seed, "master seed");
    auto* sc_trials = scl_cmd->add_option("--trials", sc.trials, "trials per dimension");
    auto* sc_workers = scl_cmd->add_option("--workers", sc.workers, "worker threads");
    auto* sc_out = scl_cmd->add_option("--out", sc.out, "table CSV file");

    auto* roc_cmd = exp_cmd->add_subcommand("roc", "decider accuracy bench");
    Common ro;
    ro.n = 300;
    ro.d = 8;
    ro.trials = 40;
    std::string roc_decider = "witness", roc_adversary = "clique";
    double roc_eps = 0.05;
    auto* ro_dec = roc_cmd->add_option("--decider", roc_decider,
                                       "witness | triangle | spectral");
    auto* ro_adv = roc_cmd->add_option("--adversary", roc_adversary,
                                       "none | clique | random | coupling");
    auto* ro_n = roc_cmd->add_option("--n", ro.n, "vertex count");
    auto* ro_p = roc_cmd->add_option("--p", ro.p, "edge probability");
    auto* ro_d = roc_cmd->add_option("--d", ro.d, "sphere dimension");
    auto* ro_eps = roc_cmd->add_option("--eps", roc_eps, "corruption fraction");
    auto* ro_seed = roc_cmd->add_option("--seed", ro.seed, "master seed");
    auto* ro_trials = roc_cmd->add_option("--trials", ro.trials, "total trials (even)");
    auto* ro_workers = roc_cmd->add_option("--workers", ro.workers, "worker threads");
    auto* ro_out = roc_cmd->add_option("--out", ro.out, "confusion CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);

    if (er_cmd->parsed()) {
        cfg.require_known({"n", "p", "seed", "out"});
        fill_int(er_n, cfg, "n", er.n);
        fill_real(er_p, cfg, "p", er.p);
        fill_int(er_seed, cfg, "seed", er.seed);
        fill_string(er_out, cfg, "out", er.out);
        rgg::RngStream rs = rgg::derive_stream(er.seed, {rgg::stream::er_graph, 0});
        rgg::Graph g = rgg::sample_er(rs, er.n, er.p);
        write_graph_or_stdout(g, er.out);
        return 0;
    }

    if (rgg_cmd->parsed()) {
        cfg.require_known({"n", "p", "d", "seed", "out", "embedding_out"});
        fill_int(rg_n, cfg, "n", rg.n);
        fill_real(rg_p, cfg, "p", rg.p);
        fill_int(rg_d, cfg, "d", rg.d);
        fill_int(rg_seed, cfg, "seed", rg.seed);
        fill_string(rg_out, cfg, "out", rg.out);
        fill_string(rg_emb, cfg, "embedding_out", rgg_embedding_out);
        rgg::RngStream rs = rgg::derive_stream(rg.seed, {rgg::stream::embedding, 0});
        rgg::RggSample s = rgg::sample_rgg(rs, rg.n, rg.d, rg.p);
        write_graph_or_stdout(s.graph, rg.out);
        if (!rgg_embedding_out.empty())
            rgg::write_embedding_file(s.embedding, rgg_embedding_out);
        return 0;
    }

    if (cpl_cmd->parsed()) {
        cfg.require_known({"n", "p", "d", "seed", "in", "out", "margin_c", "margin"});
        fill_int(cp_n, cfg, "n", cp.n);
        fill_real(cp_p, cfg, "p", cp.p);
        fill_int(cp_d, cfg, "d", cp.d);
        fill_int(cp_seed, cfg, "seed", cp.seed);
        fill_string(cp_in, cfg, "in", cpl_in);
        fill_string(cp_out, cfg, "out", cp.out);
        fill_real(cp_mc, cfg, "margin_c", cpl_margin_c);
        fill_real(cp_m, cfg, "margin", cpl_margin);

        rgg::Graph h = [&]() {
            if (cpl_in.empty()) {
                rgg::RngStream rs =
                    rgg::derive_stream(cp.seed, {rgg::stream::er_graph, 0});
                return rgg::sample_er(rs, cp.n, cp.p);
            }
            return rgg::read_graph_file(cpl_in);
        }();
        cp.n = h.n();

        rgg::CouplingConfig ccfg;
        ccfg.n = cp.n;
        ccfg.d = cp.d;
        ccfg.p = cp.p;
        if (cpl_margin >= 0.0) {
            ccfg.margin.kind = rgg::MarginRule::kExplicit;
            ccfg.margin.value = cpl_margin;
        } else {
            ccfg.margin.kind = rgg::MarginRule::kFormula;
            ccfg.margin.c = cpl_margin_c;
        }
        rgg::RngStream rs = rgg::derive_stream(cp.seed, {rgg::stream::embedding, 0});
        rgg::CouplingOutput out = rgg::couple(rs, h, ccfg);
        rgg::DriftSummary ds = rgg::drift_summary(out);
        std::printf("n=%d d=%d p=%.17g tau=%.17g margin=%.17g\n", cp.n, cp.d, cp.p,
                    out.tau, out.margin);
        std::printf("edges_in=%lld edges_out=%lld disagreements=%zu fragile=%zu\n",
                    static_cast<long long>(h.edge_count()),
                    static_cast<long long>(out.realized.edge_count()),
                    out.disagreements.size(), out.fragile.size());
        std::printf("drift_max=%.17g drift_mean=%.17g\n", ds.max, ds.mean);
        if (!cp.out.empty()) rgg::write_graph_file(out.realized, cp.out);
        return 0;
    }

    if (rec_cmd->parsed()) {
        cfg.require_known({"n", "p", "d", "seed", "rounds", "growth_c", "u1",
                           "reuse_h0", "out"});
        fill_int(rc_n, cfg, "n", rc.n);
        fill_real(rc_p, cfg, "p", rc.p);
        fill_int(rc_d, cfg, "d", rc.d);
        fill_int(rc_seed, cfg, "seed", rc.seed);
        fill_int(rc_rounds, cfg, "rounds", rec_rounds);
        fill_real(rc_growth, cfg, "growth_c", rec_growth_c);
        fill_real(rc_u1, cfg, "u1", rec_u1);
        fill_flag(rc_reuse, cfg, "reuse_h0", rec_reuse);
        fill_string(rc_out, cfg, "out", rc.out);

        rgg::SphericalLaw law(rc.d, rc.p);
        if (rec_u1 <= 0.0) {
            rgg::MarginRule rule;
            rule.kind = rgg::MarginRule::kFormula;
            rule.c = 2.0;
            rec_u1 = rgg::margin_from_rule(rule, rc.n, rc.p, rc.d);
        }
        rgg::IntervalSchedule schedule =
            rgg::build_schedule(law, rc.n, rec_growth_c, rec_rounds, rec_u1);
        rgg::MultiRoundOptions opts;
        opts.reuse_round0_bits = rec_reuse;
        rgg::MultiRoundOutput out =
            rgg::multi_round_couple(rc.seed, rc.n, rc.p, rc.d, schedule, opts);
        for (const rgg::RoundReport& r : out.reports)
            std::printf("round=%d interval=[%.17g,%.17g] defects=%lld flips=%lld\n", r.t,
                        r.interval_lo, r.interval_hi, r.defect_count, r.flips_applied);
        std::printf("edges_h0=%lld edges_final=%lld changed=%lld\n",
                    static_cast<long long>(out.h0.edge_count()),
                    static_cast<long long>(out.final_graph.edge_count()),
                    static_cast<long long>(
                        rgg::Graph::edge_difference(out.h0, out.final_graph)));
        if (!rc.out.empty()) {
            auto f = open_out(rc.out);
            rgg::write_round_reports_csv(out.reports, f);
        }
        return 0;
    }

    if (tst_cmd->parsed()) {
        cfg.require_known({"in", "p", "d", "seed", "decider", "eps", "calibration"});
        fill_string(ts_in, cfg, "in", tst_in);
        fill_real(ts_p, cfg, "p", ts.p);
        fill_int(ts_d, cfg, "d", ts.d);
        fill_int(ts_seed, cfg, "seed", ts.seed);
        fill_string(ts_dec, cfg, "decider", tst_decider);
        fill_real(ts_eps, cfg, "eps", tst_eps);
        fill_string(ts_cal, cfg, "calibration", tst_calibration);

        rgg::Graph g = rgg::read_graph_file(tst_in);
        rgg::Decision dec;
        if (tst_decider == "witness") {
            rgg::WitnessCalibration cal;
            bool found = false;
            if (!tst_calibration.empty()) {
                std::ifstream in(tst_calibration);
                if (!in)
                    throw rgg::FormatError("cannot open calibration file '" +
                                           tst_calibration + "'");
                for (const rgg::WitnessCalibration& row : rgg::read_calibration_csv(in)) {
                    if (row.n == g.n() && row.p == ts.p && row.d == ts.d) {
                        cal = row;
                        found = true;
                    }
                }
                if (!found)
                    throw rgg::FormatError("calibration file has no row for this n,p,d");
                // thresholds come from the file; c_prime/eps are not stored there
                cal.eps = tst_eps;
            } else {
                cal = rgg::calibrate_witness(
                    rgg::derive_seed(ts.seed, {rgg::stream::calibration}), g.n(), ts.p,
                    ts.d, tst_eps);
            }
            dec = rgg::decide_witness(g, ts.p, ts.d, cal);
        } else if (tst_decider == "triangle") {
            dec = rgg::decide_triangle_auto(g, ts.p, ts.d);
        } else if (tst_decider == "spectral") {
            dec = rgg::decide_spectral(g, ts.p, ts.d);
        } else {
            throw rgg::FormatError("unknown decider '" + tst_decider + "'");
        }
        std::printf("DECISION=%s margin=%.17g\n", dec.is_rgg ? "RGG" : "NULL",
                    dec.margin);
        return 0;
    }

    if (thr_cmd->parsed()) {
        cfg.require_known({"property", "model", "n", "d", "seed", "trials", "workers",
                           "p_min", "p_max", "points", "grid", "out"});
        fill_string(th_prop, cfg, "property", thr_property);
        fill_string(th_model, cfg, "model", thr_model);
        fill_int(th_n, cfg, "n", th.n);
        fill_int(th_d, cfg, "d", th.d);
        fill_int(th_seed, cfg, "seed", th.seed);
        fill_int(th_trials, cfg, "trials", th.trials);
        fill_int(th_workers, cfg, "workers", th.workers);
        fill_real(th_pmin, cfg, "p_min", thr_pmin);
        fill_real(th_pmax, cfg, "p_max", thr_pmax);
        fill_int(th_points, cfg, "points", thr_points);
        fill_string(th_grid, cfg, "grid", thr_grid);
        fill_string(th_out, cfg, "out", th.out);

        std::vector<double> grid = thr_grid.empty() ? log_grid(thr_pmin, thr_pmax, thr_points)
                                                    : parse_real_list(thr_grid);
        rgg::ThresholdCurve curve = rgg::run_threshold(
            rgg::property_from_name(thr_property), rgg::model_from_name(thr_model), th.n,
            th.d, grid, th.trials, th.seed, th.workers);
        if (curve.p_c_ok)
            std::printf("p_c=%.17g\n", curve.p_c);
        else
            std::printf("p_c=unresolved (curve does not cross 1/2)\n");
        if (curve.window_ok)
            std::printf("window=%.17g\n", curve.window);
        else
            std::printf("window=unresolved\n");
        if (!th.out.empty()) {
            auto f = open_out(th.out);
            rgg::write_threshold_csv(curve, f);
        }
        return 0;
    }

    if (fkg_cmd->parsed()) {
        cfg.require_known({"d", "seed", "samples", "out"});
        fill_int(fk_d, cfg, "d", fk.d);
        fill_int(fk_seed, cfg, "seed", fk.seed);
        fill_int(fk_samples, cfg, "samples", fkg_samples);
        fill_string(fk_out, cfg, "out", fk.out);

        rgg::FkgEstimate est = rgg::run_fkg(fk.seed, fk.d, fkg_samples);
        std::printf("mu3_plus_mu2=%.17g se=%.17g\n", est.mu[3] + est.mu[2],
                    std::sqrt(est.se[3] * est.se[3] + est.se[2] * est.se[2]));
        std::printf("a_hat=%.17g z=%.17g\n", est.a_hat,
                    est.a_se > 0 ? est.a_hat / est.a_se : 0.0);
        std::printf("gap=%.17g z=%.17g\n", est.gap,
                    est.gap_se > 0 ? est.gap / est.gap_se : 0.0);
        if (!fk.out.empty()) {
            auto f = open_out(fk.out);
            rgg::write_fkg_csv(est, f);
        }
        return 0;
    }

    if (scl_cmd->parsed()) {
        cfg.require_known({"n", "p", "d_list", "seed", "trials", "workers", "out"});
        fill_int(sc_n, cfg, "n", sc.n);
        fill_real(sc_p, cfg, "p", sc.p);
        fill_string(sc_dlist, cfg, "d_list", scl_dlist);
        fill_int(sc_seed, cfg, "seed", sc.seed);
        fill_int(sc_trials, cfg, "trials", sc.trials);
        fill_int(sc_workers, cfg, "workers", sc.workers);
        fill_string(sc_out, cfg, "out", sc.out);

        rgg::ScalingTable table = rgg::run_scaling(sc.seed, sc.n, sc.p,
                                                   parse_int_list(scl_dlist), sc.trials,
                                                   sc.workers);
        std::printf("slope=%.17g drift_order_fraction=%.17g\n", table.slope,
                    table.drift_order_fraction);
        if (!sc.out.empty()) {
            auto f = open_out(sc.out);
            rgg::write_scaling_csv(table, f);
        }
        return 0;
    }

    if (roc_cmd->parsed()) {
        cfg.require_known({"decider", "adversary", "n", "p", "d", "eps", "seed",
                           "trials", "workers", "out"});
        fill_string(ro_dec, cfg, "decider", roc_decider);
        fill_string(ro_adv, cfg, "adversary", roc_adversary);
        fill_int(ro_n, cfg, "n", ro.n);
        fill_real(ro_p, cfg, "p", ro.p);
        fill_int(ro_d, cfg, "d", ro.d);
        fill_real(ro_eps, cfg, "eps", roc_eps);
        fill_int(ro_seed, cfg, "seed", ro.seed);
        fill_int(ro_trials, cfg, "trials", ro.trials);
        fill_int(ro_workers, cfg, "workers", ro.workers);
        fill_string(ro_out, cfg, "out", ro.out);

        rgg::RocTable table = rgg::run_roc(ro.seed, roc_decider, roc_adversary, ro.n,
                                           ro.p, ro.d, roc_eps, ro.trials, ro.workers);
        std::printf("accuracy=%.17g tp=%d fp=%d tn=%d fn=%d\n", table.accuracy, table.tp,
                    table.fp, table.tn, table.fn);
        if (!ro.out.empty()) {
            auto f = open_out(ro.out);
            rgg::write_roc_csv(table, f);
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rgg::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const rgg::FormatError& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "invalid parameters: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
