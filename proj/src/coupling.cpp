#include "rggcouple/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgg {

double margin_from_rule(const MarginRule& rule, int n, double p, int d) {
    if (rule.kind == MarginRule::kExplicit) {
        if (rule.value < 0.0) throw std::domain_error("margin: negative explicit value");
        return rule.value;
    }
    if (rule.c < 0.0) throw std::domain_error("margin: negative constant");
    double ln = std::log(static_cast<double>(n));
    double lead = std::max(std::sqrt(n * p), std::sqrt(ln));
    return rule.c * lead * std::pow(ln, 1.5) / static_cast<double>(d);
}

Graph sample_er(RngStream& rng, int n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_er: p outside [0,1]");
    Graph g(n);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (rng.bernoulli(p)) g.set_edge(i, j, true);
        }
    }
    return g;
}

RggSample sample_rgg(RngStream& rng, int n, int d, double p) {
    SphericalLaw law(d, p);
    LatentEmbedding e;
    e.V.resize(d, n);
    for (int j = 0; j < n; j++) law.sample_sphere(rng, e.V.col(j));
    Graph g = realize_rgg(e, law);
    return {std::move(g), std::move(e)};
}

Graph realize_rgg(const LatentEmbedding& e, const SphericalLaw& law) {
    int n = e.n();
    if (e.d() != law.dim()) throw std::domain_error("realize_rgg: dimension mismatch");
    Eigen::MatrixXd gram(n, n);
    gram.noalias() = e.V.transpose() * e.V;
    Graph g(n);
    double tau = law.tau();
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (gram(i, j) >= tau) g.set_edge(i, j, true);
        }
    }
    return g;
}

CouplingOutput couple(RngStream& rng, const Graph& H, const CouplingConfig& cfg) {
    int n = cfg.n;
    if (n != H.n()) throw std::domain_error("couple: cfg.n != H.n()");
    if (n < 1) throw std::domain_error("couple: n must be >= 1");
    if (cfg.d < 2) throw std::domain_error("couple: d must be >= 2");
    SphericalLaw law(cfg.d, cfg.p, cfg.cdf_tol);

    CouplingOutput out{H, Graph(n), {}, law.tau(), 0.0, {}, {}, {}, {}};
    out.embedding.V.resize(cfg.d, n);
    for (int j = 0; j < n; j++) law.sample_sphere(rng, out.embedding.V.col(j));

    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (cfg.record_drift) out.at_flip_inner.assign(pairs, 0.0);

    // V_i is final once the j=i loop has run; every later flip anchors on it.
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            FlipRecord rec = flip(law, out.embedding.V.col(i), out.embedding.V.col(j),
                                  H.edge(i, j));
            if (cfg.record_drift) out.at_flip_inner[pair_index(n, i, j)] = rec.post_inner;
        }
    }

    out.final_inner.assign(pairs, 0.0);
    Eigen::MatrixXd gram(n, n);
    gram.noalias() = out.embedding.V.transpose() * out.embedding.V;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            double v = gram(i, j);
            out.final_inner[pair_index(n, i, j)] = v;
            if (v >= out.tau) out.realized.set_edge(i, j, true);
        }
    }

    out.margin = margin_from_rule(cfg.margin, n, cfg.p, cfg.d);
    out.fragile = fragile_pairs(out, out.margin);
    out.disagreements = disagreement_pairs(out);
    return out;
}

std::vector<std::pair<int, int>> fragile_pairs(const CouplingOutput& out, double margin) {
    std::vector<std::pair<int, int>> res;
    int n = out.H.n();
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (std::fabs(out.final_inner[pair_index(n, i, j)] - out.tau) < margin) {
                res.emplace_back(i, j);
            }
        }
    }
    return res;
}

std::vector<std::pair<int, int>> disagreement_pairs(const CouplingOutput& out) {
    std::vector<std::pair<int, int>> res;
    int n = out.H.n();
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (out.H.edge(i, j) != out.realized.edge(i, j)) res.emplace_back(i, j);
        }
    }
    return res;
}

std::vector<double> drift_values(const CouplingOutput& out) {
    if (out.at_flip_inner.empty())
        throw std::domain_error("drift_values: coupling ran without record_drift");
    std::vector<double> v(out.final_inner.size());
    for (std::size_t k = 0; k < v.size(); k++) {
        v[k] = std::fabs(out.final_inner[k] - out.at_flip_inner[k]);
    }
    return v;
}

DriftSummary drift_summary(const CouplingOutput& out) {
    std::vector<double> v = drift_values(out);
    if (v.empty()) return {};
    DriftSummary s;
    s.mean = mean(v);
    std::sort(v.begin(), v.end());
    s.max = v.back();
    auto q = [&](double f) {
        std::size_t idx = static_cast<std::size_t>(f * (v.size() - 1));
        return v[idx];
    };
    s.q50 = q(0.5);
    s.q90 = q(0.9);
    s.q99 = q(0.99);
    return s;
}

DominanceTriple dominance_triple(RngStream& rng, const CouplingConfig& cfg) {
    Graph H = sample_er(rng, cfg.n, cfg.p);
    CouplingOutput out = couple(rng, H, cfg);
    int n = cfg.n;
    DominanceTriple t{Graph(n), out.H, Graph(n), true, true};
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            double v = out.final_inner[pair_index(n, i, j)];
            bool plus = v >= out.tau - out.margin;
            bool minus = v >= out.tau + out.margin;
            if (plus) t.g_plus.set_edge(i, j, true);
            if (minus) t.g_minus.set_edge(i, j, true);
            bool h = H.edge(i, j);
            if (minus && !h) t.minus_in_h = false;
            if (h && !plus) t.h_in_plus = false;
        }
    }
    return t;
}

std::vector<Eigen::VectorXd> make_directions(const SphericalLaw& law, int k,
                                             std::uint64_t seed) {
    std::vector<Eigen::VectorXd> dirs;
    dirs.reserve(k);
    for (int i = 0; i < k; i++) {
        RngStream s = derive_stream(seed, {stream::directions, static_cast<std::uint64_t>(i)});
        dirs.push_back(law.sample_sphere(s));
    }
    return dirs;
}

UniformityReport uniformity_report(const LatentEmbedding& e, const SphericalLaw& law,
                                   const std::vector<Eigen::VectorXd>& directions,
                                   double alpha) {
    UniformityReport rep;
    rep.alpha = alpha;
    auto cdf = [&law](double x) { return law.cdf(x); };
    int n = e.n();
    for (std::size_t k = 0; k < directions.size(); k++) {
        const Eigen::VectorXd& w = directions[k];
        if (w.size() != e.d())
            throw std::domain_error("uniformity_report: direction dimension mismatch");
        std::vector<double> vals(n);
        for (int i = 0; i < n; i++) vals[i] = w.dot(e.V.col(i));
        rep.entries.push_back({"direction_" + std::to_string(k), ks_test(vals, cdf)});
    }
    if (n >= 4) {
        // disjoint pairs (0,1), (2,3), ... are mutually independent inner
        // products under uniformity
        std::vector<double> vals;
        vals.reserve(n / 2);
        for (int i = 0; i + 1 < n; i += 2) {
            vals.push_back(e.V.col(i).dot(e.V.col(i + 1)));
        }
        rep.entries.push_back({"disjoint_pairs", ks_test(vals, cdf)});
    }
    rep.pass = true;
    for (const auto& ent : rep.entries) {
        if (ent.ks.p_value < alpha) rep.pass = false;
    }
    return rep;
}

}  // namespace rgg
