#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rggcouple/coupling.hpp"
#include "rggcouple/stats.hpp"

namespace rgg {

// One refinement round: pairs whose inner product currently sits inside
// [interval_lo, interval_hi] are re-forced to a fresh unbiased bit.
struct RoundReport {
    int t = 0;
    long long defect_count = 0;
    double interval_lo = 0.0;
    double interval_hi = 0.0;
    long long flips_applied = 0;
};

// Rounds 1..T. Each interval [tau - L_t, tau + U_t] contains tau, puts equal
// mass on both sides (so a fair bit keeps the law intact), and the total
// lengths strictly decrease.
struct IntervalSchedule {
    std::vector<Interval> rounds;
    double C = 1.0;
    double balance_tol = 1e-6;
};

// Round 1 spans c1 * round1_margin above tau; L_1 balances the mass below.
// Later rounds shrink via U_{t+1} = C (L_t + U_t) max( (log n)^{3/4}
// sqrt(n p (L_t + U_t)) / d^{1/4}, log n / sqrt(d) ), with L_{t+1} again
// balancing the mass. Construction stops once the interval mass drops below
// 1/n^3 or t_max rounds exist; throws if the lengths ever fail to contract.
IntervalSchedule build_schedule(const SphericalLaw& law, int n, double C, int t_max,
                                double round1_margin, double c1 = 2.0);

struct MultiRoundOptions {
    double cdf_tol = 1e-12;
    // Negative control: feed round 1+ the round-0 bits again instead of fresh
    // fair bits. This deliberately breaks the independence that keeps the
    // embedding uniform; only tests should turn it on.
    bool reuse_round0_bits = false;
};

struct MultiRoundOutput {
    LatentEmbedding embedding;
    Graph h0;
    Graph final_graph;
    double tau = 0.0;
    std::vector<RoundReport> reports;
    std::vector<std::vector<std::pair<int, int>>> defects;  // per round
};

// Round 0 couples an ER(n,p) sample; each later round re-forces the pairs
// inside its interval with fresh Bernoulli(1/2) bits (the balanced intervals
// make 1/2 the neutral rate). All streams derive from `seed` by fixed labels.
MultiRoundOutput multi_round_couple(std::uint64_t seed, int n, double p, int d,
                                    const IntervalSchedule& schedule,
                                    const MultiRoundOptions& opts = {});

// CSV: header t,defect_count,interval_lo,interval_hi,flips_applied
void write_round_reports_csv(const std::vector<RoundReport>& reports, std::ostream& out);
std::vector<RoundReport> read_round_reports_csv(std::istream& in);

// Two-sample KS across three per-graph statistics: edge count, signed
// triangles (centered at p), degree variance.
struct AuditResult {
    KsResult edges;
    KsResult triangles;
    KsResult degree_variance;
    double alpha = 1e-3;
    bool pass = false;
};
AuditResult distribution_audit(const std::vector<Graph>& a, const std::vector<Graph>& b,
                               double p, double alpha = 1e-3);

}  // namespace rgg
