#include "rggcouple/recursive.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rggcouple/errors.hpp"
#include "rggcouple/graphstats.hpp"

namespace rgg {

IntervalSchedule build_schedule(const SphericalLaw& law, int n, double C, int t_max,
                                double round1_margin, double c1) {
    if (n < 2) throw std::domain_error("build_schedule: n must be >= 2");
    if (!(C > 0.0)) throw std::domain_error("build_schedule: C must be > 0");
    if (!(round1_margin > 0.0)) throw std::domain_error("build_schedule: round1_margin must be > 0");
    if (!(c1 > 1.0)) throw std::domain_error("build_schedule: c1 must exceed 1");

    IntervalSchedule sched;
    sched.C = C;
    double tau = law.tau();
    double p = law.p();
    double d = static_cast<double>(law.dim());
    double ln = std::log(static_cast<double>(n));
    double min_mass = 1.0 / (static_cast<double>(n) * n * n);

    auto balance_lower = [&](double U) {
        // L such that P[tau-L <= X <= tau] = P[tau <= X <= tau+U]
        double target = 2.0 * (1.0 - p) - law.cdf(tau + U);
        double lo = law.quantile(std::clamp(target, 1e-15, 1.0 - 1e-15));
        return tau - lo;
    };

    double U = c1 * round1_margin;
    if (tau + U >= 1.0) throw std::domain_error("build_schedule: round-1 interval leaves [-1,1]");
    double L = balance_lower(U);
    double prev_len = std::numeric_limits<double>::infinity();
    for (int t = 1; t <= t_max; t++) {
        if (!(L > 0.0) || !(U > 0.0))
            throw NumericalError("build_schedule: interval collapsed");
        double len = L + U;
        if (len >= prev_len)
            throw std::domain_error("build_schedule: interval lengths not contracting");
        Interval iv{tau - L, tau + U};
        double mass = law.cdf(iv.hi) - law.cdf(iv.lo);
        if (mass < min_mass) break;
        // half-mass sanity: the fair flip bit must be neutral on this interval
        double below = (1.0 - p) - law.cdf(iv.lo);
        double above = law.cdf(iv.hi) - (1.0 - p);
        if (std::fabs(below - above) > sched.balance_tol * mass)
            throw NumericalError("build_schedule: interval mass not balanced");
        sched.rounds.push_back(iv);
        prev_len = len;
        double grow = std::max(std::pow(ln, 0.75) * std::sqrt(n * p * len) / std::pow(d, 0.25),
                               ln / std::sqrt(d));
        U = C * len * grow;
        L = balance_lower(U);
    }
    return sched;
}

MultiRoundOutput multi_round_couple(std::uint64_t seed, int n, double p, int d,
                                    const IntervalSchedule& schedule,
                                    const MultiRoundOptions& opts) {
    SphericalLaw law(d, p, opts.cdf_tol);
    RngStream h0_rng = derive_stream(seed, {stream::er_graph, 0});
    Graph h0 = sample_er(h0_rng, n, p);

    CouplingConfig cfg;
    cfg.n = n;
    cfg.d = d;
    cfg.p = p;
    cfg.cdf_tol = opts.cdf_tol;
    cfg.record_drift = false;
    RngStream embed_rng = derive_stream(seed, {stream::embedding});
    CouplingOutput round0 = couple(embed_rng, h0, cfg);

    MultiRoundOutput out{std::move(round0.embedding), std::move(h0), Graph(n),
                         law.tau(),  {},          {}};

    for (std::size_t r = 0; r < schedule.rounds.size(); r++) {
        int t = static_cast<int>(r) + 1;
        Interval iv = schedule.rounds[r];
        Graph ht(1);
        if (opts.reuse_round0_bits) {
            ht = out.h0;
        } else {
            RngStream bit_rng = derive_stream(seed, {stream::round_bits, static_cast<std::uint64_t>(t)});
            ht = sample_er(bit_rng, n, 0.5);
        }
        RoundReport rep;
        rep.t = t;
        rep.interval_lo = iv.lo;
        rep.interval_hi = iv.hi;
        std::vector<std::pair<int, int>> defect;
        for (int j = 1; j < n; j++) {
            for (int i = 0; i < j; i++) {
                FlipRecord rec = flip_interval(law, out.embedding.V.col(i),
                                               out.embedding.V.col(j), ht.edge(i, j), iv);
                if (rec.pre_inner >= iv.lo && rec.pre_inner <= iv.hi) {
                    defect.emplace_back(i, j);
                    if (rec.flipped) rep.flips_applied++;
                }
            }
        }
        rep.defect_count = static_cast<long long>(defect.size());
        out.reports.push_back(rep);
        out.defects.push_back(std::move(defect));
    }

    out.final_graph = realize_rgg(out.embedding, law);
    return out;
}

void write_round_reports_csv(const std::vector<RoundReport>& reports, std::ostream& out) {
    out << "t,defect_count,interval_lo,interval_hi,flips_applied\n";
    for (const RoundReport& r : reports) {
        std::ostringstream line;
        line.precision(17);
        line << r.t << ',' << r.defect_count << ',' << r.interval_lo << ','
             << r.interval_hi << ',' << r.flips_applied;
        out << line.str() << '\n';
    }
}

std::vector<RoundReport> read_round_reports_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "t,defect_count,interval_lo,interval_hi,flips_applied")
        throw FormatError("round report csv: bad header");
    std::vector<RoundReport> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        RoundReport r;
        char c1, c2, c3, c4;
        std::istringstream ls(line);
        if (!(ls >> r.t >> c1 >> r.defect_count >> c2 >> r.interval_lo >> c3 >>
              r.interval_hi >> c4 >> r.flips_applied) ||
            c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',')
            throw FormatError("round report csv: bad line");
        out.push_back(r);
    }
    return out;
}

AuditResult distribution_audit(const std::vector<Graph>& a, const std::vector<Graph>& b,
                               double p, double alpha) {
    if (a.size() < 2 || b.size() < 2)
        throw std::domain_error("distribution_audit: need >= 2 graphs per side");
    auto stats = [&](const std::vector<Graph>& gs, int which) {
        std::vector<double> v;
        v.reserve(gs.size());
        for (const Graph& g : gs) {
            if (which == 0) v.push_back(static_cast<double>(g.edge_count()));
            else if (which == 1) v.push_back(signed_triangles(g, p));
            else {
                std::vector<int> deg = g.degrees();
                std::vector<double> degd(deg.begin(), deg.end());
                v.push_back(variance(degd));
            }
        }
        return v;
    };
    AuditResult res;
    res.alpha = alpha;
    res.edges = ks_test_two(stats(a, 0), stats(b, 0));
    res.triangles = ks_test_two(stats(a, 1), stats(b, 1));
    res.degree_variance = ks_test_two(stats(a, 2), stats(b, 2));
    res.pass = res.edges.p_value >= alpha && res.triangles.p_value >= alpha &&
               res.degree_variance.p_value >= alpha;
    return res;
}

}  // namespace rgg
