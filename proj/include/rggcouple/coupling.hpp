#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rggcouple/embedding.hpp"
#include "rggcouple/flip_map.hpp"
#include "rggcouple/graph.hpp"
#include "rggcouple/rng.hpp"
#include "rggcouple/sphere_law.hpp"
#include "rggcouple/stats.hpp"

namespace rgg {

// linear index of the unordered pair (i,j), i<j, among C(n,2) pairs
inline std::size_t pair_index(int n, int i, int j) {
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
}

struct MarginRule {
    enum Kind { kFormula, kExplicit };
    Kind kind = kFormula;
    // kFormula: margin = c * max(sqrt(n p), sqrt(log n)) * (log n)^{3/2} / d
    double c = 0.0;
    // kExplicit: margin = value
    double value = 0.0;
};

double margin_from_rule(const MarginRule& rule, int n, double p, int d);

struct CouplingConfig {
    int n = 0;
    int d = 0;
    double p = 0.0;
    double cdf_tol = 1e-12;
    bool record_drift = true;
    MarginRule margin;
};

// Everything produced by one run of the sequential coupling sweep.
// final_inner holds <V_i, V_j> for the final embedding, pair-indexed;
// at_flip_inner holds the inner product right after pair (i,j) was forced
// (empty when record_drift is off). fragile/disagreements are derived from
// margin at construction but can be recomputed with other margins via the
// free functions below.
struct CouplingOutput {
    Graph H;
    Graph realized;
    LatentEmbedding embedding;
    double tau = 0.0;
    double margin = 0.0;
    std::vector<double> final_inner;
    std::vector<double> at_flip_inner;
    std::vector<std::pair<int, int>> fragile;
    std::vector<std::pair<int, int>> disagreements;
};

struct DriftSummary {
    double max = 0.0;
    double mean = 0.0;
    double q50 = 0.0;
    double q90 = 0.0;
    double q99 = 0.0;
};

Graph sample_er(RngStream& rng, int n, double p);

// Uniform latent vectors plus the graph they realize at tau(d, p).
struct RggSample {
    Graph graph;
    LatentEmbedding embedding;
};
RggSample sample_rgg(RngStream& rng, int n, int d, double p);

Graph realize_rgg(const LatentEmbedding& e, const SphericalLaw& law);

// The sequential coupling: starts from i.i.d. uniform vectors, then forces
// pair orientations to H's bits in lexicographic order (j outer, i < j),
// each flip anchored at the already-finalized vector V_i. O(n^2 d) time.
CouplingOutput couple(RngStream& rng, const Graph& H, const CouplingConfig& cfg);

std::vector<std::pair<int, int>> fragile_pairs(const CouplingOutput& out, double margin);
std::vector<std::pair<int, int>> disagreement_pairs(const CouplingOutput& out);

// |final - at_flip| per pair; requires record_drift
std::vector<double> drift_values(const CouplingOutput& out);
DriftSummary drift_summary(const CouplingOutput& out);

// Sandwich graphs: G_plus keeps every pair with final inner >= tau - margin,
// G_minus every pair with final inner >= tau + margin.
struct DominanceTriple {
    Graph g_minus;
    Graph h;
    Graph g_plus;
    bool minus_in_h = false;
    bool h_in_plus = false;
};
DominanceTriple dominance_triple(RngStream& rng, const CouplingConfig& cfg);

// KS checks that the coupled embedding is still uniform: fixed-direction
// coordinate samples and disjoint-pair inner products, each against the
// coordinate law.
struct UniformityEntry {
    std::string name;
    KsResult ks;
};
struct UniformityReport {
    std::vector<UniformityEntry> entries;
    double alpha = 1e-3;
    bool pass = false;
};
std::vector<Eigen::VectorXd> make_directions(const SphericalLaw& law, int k,
                                             std::uint64_t seed);
UniformityReport uniformity_report(const LatentEmbedding& e, const SphericalLaw& law,
                                   const std::vector<Eigen::VectorXd>& directions,
                                   double alpha = 1e-3);

}  // namespace rgg
