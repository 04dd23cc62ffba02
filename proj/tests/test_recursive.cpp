#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rggcouple/errors.hpp"
#include "rggcouple/recursive.hpp"

#include <cmath>
#include <sstream>
#include <vector>

using namespace rgg;

namespace {

double margin_for(int n, double p, int d, double c) {
    MarginRule rule;
    rule.kind = MarginRule::kFormula;
    rule.c = c;
    return margin_from_rule(rule, n, p, d);
}

}  // namespace

TEST_CASE("interval schedule contracts and balances") {
    const int n = 300;
    const double p = 0.05;
    const int d = 16384;
    SphericalLaw law(d, p);
    IntervalSchedule sched = build_schedule(law, n, 1.0, 3, margin_for(n, p, d, 2.0));
    REQUIRE(!sched.rounds.empty());
    CHECK(sched.rounds.size() <= 3);
    double prev = 2.0;
    for (const Interval& iv : sched.rounds) {
        CHECK(iv.lo < law.tau());
        CHECK(iv.hi > law.tau());
        double len = iv.hi - iv.lo;
        CHECK(len < prev);
        prev = len;
        // fair bits stay neutral: equal mass on both sides of tau
        CHECK(law.q_interval(iv) == doctest::Approx(0.5).epsilon(1e-5));
    }
}

TEST_CASE("interval schedule stops at negligible mass") {
    // tiny first interval: the mass floor 1/n^3 cuts construction short
    SphericalLaw law(256, 0.1);
    IntervalSchedule sched = build_schedule(law, 50, 0.05, 8, 1e-7);
    CHECK(sched.rounds.size() < 8);
}

TEST_CASE("interval schedule rejects bad inputs") {
    SphericalLaw law(1024, 0.1);
    CHECK_THROWS_AS(build_schedule(law, 1, 1.0, 3, 1e-3), std::domain_error);
    CHECK_THROWS_AS(build_schedule(law, 100, 0.0, 3, 1e-3), std::domain_error);
    CHECK_THROWS_AS(build_schedule(law, 100, 1.0, 3, -1.0), std::domain_error);
    CHECK_THROWS_AS(build_schedule(law, 100, 1.0, 3, 1e-3, 0.5), std::domain_error);
    // growth factor too large: the second interval fails to contract
    CHECK_THROWS_AS(build_schedule(law, 100, 500.0, 3, 1e-3), std::domain_error);
    // first interval cannot leave the support
    SphericalLaw low(8, 0.05);
    CHECK_THROWS_AS(build_schedule(low, 300, 1.0, 3, 0.6), std::domain_error);
}

TEST_CASE("rounds report the pairs inside their interval") {
    const int n = 60;
    const double p = 0.1;
    const int d = 256;
    SphericalLaw law(d, p);
    IntervalSchedule sched = build_schedule(law, n, 0.4, 2, 0.02);
    REQUIRE(sched.rounds.size() == 2);
    MultiRoundOutput out = multi_round_couple(707, n, p, d, sched);
    REQUIRE(out.reports.size() == 2);
    REQUIRE(out.defects.size() == 2);
    for (std::size_t r = 0; r < out.reports.size(); r++) {
        const RoundReport& rep = out.reports[r];
        CHECK(rep.t == static_cast<int>(r) + 1);
        CHECK(rep.defect_count == static_cast<long long>(out.defects[r].size()));
        CHECK(rep.interval_lo == sched.rounds[r].lo);
        CHECK(rep.interval_hi == sched.rounds[r].hi);
        CHECK(rep.flips_applied <= rep.defect_count);
    }
    CHECK(out.tau == law.tau());
    // the published graph is the thresholded final embedding
    CHECK(realize_rgg(out.embedding, law) == out.final_graph);
    for (int i = 0; i < n; i++) {
        CHECK(std::fabs(out.embedding.V.col(i).norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("multi-round runs are seed-deterministic") {
    SphericalLaw law(128, 0.15);
    IntervalSchedule sched = build_schedule(law, 40, 0.3, 2, 0.03);
    MultiRoundOutput a = multi_round_couple(11, 40, 0.15, 128, sched);
    MultiRoundOutput b = multi_round_couple(11, 40, 0.15, 128, sched);
    CHECK(a.h0 == b.h0);
    CHECK(a.final_graph == b.final_graph);
    CHECK((a.embedding.V - b.embedding.V).norm() == 0.0);
    MultiRoundOutput c = multi_round_couple(12, 40, 0.15, 128, sched);
    CHECK(Graph::edge_difference(a.h0, c.h0) > 0);
}

TEST_CASE("fresh fair bits keep the output distribution intact") {
    const int n = 80;
    const double p = 0.15;
    const int d = 64;
    SphericalLaw law(d, p);
    IntervalSchedule sched = build_schedule(law, n, 0.3, 2, 0.02);
    std::vector<Graph> refined, direct;
    for (std::uint64_t s = 0; s < 12; s++) {
        refined.push_back(multi_round_couple(900 + s, n, p, d, sched).final_graph);
        RngStream rng(derive_seed(950 + s, {1}));
        direct.push_back(sample_rgg(rng, n, d, p).graph);
    }
    AuditResult audit = distribution_audit(refined, direct, p);
    CHECK(audit.pass);
    CHECK(audit.edges.p_value > audit.alpha);
    CHECK(audit.triangles.p_value > audit.alpha);
    CHECK(audit.degree_variance.p_value > audit.alpha);
}

TEST_CASE("reusing the round-0 bits poisons the output distribution") {
    // the reused bits carry rate p instead of the neutral 1/2, dragging
    // interval pairs below the threshold in bulk
    const int n = 80;
    const double p = 0.15;
    const int d = 64;
    SphericalLaw law(d, p);
    IntervalSchedule sched = build_schedule(law, n, 0.3, 2, 0.02);
    MultiRoundOptions opts;
    opts.reuse_round0_bits = true;
    std::vector<Graph> poisoned, direct;
    for (std::uint64_t s = 0; s < 12; s++) {
        poisoned.push_back(multi_round_couple(900 + s, n, p, d, sched, opts).final_graph);
        RngStream rng(derive_seed(950 + s, {1}));
        direct.push_back(sample_rgg(rng, n, d, p).graph);
    }
    AuditResult audit = distribution_audit(poisoned, direct, p);
    CHECK(!audit.pass);
}

TEST_CASE("audit separates graphs of different density") {
    RngStream rng(derive_seed(41, {1}));
    std::vector<Graph> a, b, c;
    for (int t = 0; t < 10; t++) {
        a.push_back(sample_er(rng, 100, 0.2));
        b.push_back(sample_er(rng, 100, 0.2));
        c.push_back(sample_er(rng, 100, 0.35));
    }
    CHECK(distribution_audit(a, b, 0.2).pass);
    CHECK(!distribution_audit(a, c, 0.2).pass);
}

TEST_CASE("round report csv round trip") {
    std::vector<RoundReport> reports;
    for (int t = 1; t <= 3; t++) {
        RoundReport r;
        r.t = t;
        r.defect_count = 100 - 30 * t;
        r.interval_lo = 0.1 - 0.01 * t;
        r.interval_hi = 0.1 + 0.012 * t;
        r.flips_applied = 40 - 12 * t;
        reports.push_back(r);
    }
    std::ostringstream os;
    write_round_reports_csv(reports, os);
    std::istringstream is(os.str());
    std::vector<RoundReport> back = read_round_reports_csv(is);
    REQUIRE(back.size() == reports.size());
    for (std::size_t i = 0; i < back.size(); i++) {
        CHECK(back[i].t == reports[i].t);
        CHECK(back[i].defect_count == reports[i].defect_count);
        CHECK(back[i].interval_lo == reports[i].interval_lo);
        CHECK(back[i].interval_hi == reports[i].interval_hi);
        CHECK(back[i].flips_applied == reports[i].flips_applied);
    }
    std::string header_line = os.str().substr(0, os.str().find('\n'));
    CHECK(header_line == "t,defect_count,interval_lo,interval_hi,flips_applied");
    std::istringstream bad("x,y\n1,2\n");
    CHECK_THROWS_AS(read_round_reports_csv(bad), FormatError);
    std::istringstream trunc("t,defect_count,interval_lo,interval_hi,flips_applied\n1,2,0.1\n");
    CHECK_THROWS_AS(read_round_reports_csv(trunc), FormatError);
}
