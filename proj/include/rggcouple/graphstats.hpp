#pragma once

#include <Eigen/Core>

#include "rggcouple/coupling.hpp"
#include "rggcouple/graph.hpp"
#include "rggcouple/rng.hpp"

namespace rgg {

// Centered adjacency A = G - p(J - I): zero diagonal, 1-p on edges, -p on
// non-edges. Materialized dense on demand; matvecs run off the edge list.
struct CenteredAdjacency {
    const Graph* g;
    double p;

    Eigen::MatrixXd dense() const;
};

Eigen::MatrixXd centered_dense(const Graph& g, double p);

// sum over unordered triples of the product of centered entries,
// computed as tr(A^3)/6 on the dense centered matrix.
double signed_triangles(const Graph& g, double p);

struct EigenEstimate {
    double value = 0.0;
    int iters = 0;
    bool converged = false;
};

// Largest |eigenvalue| of the centered adjacency; power iteration on A^2
// (immune to a +-lambda tie), deterministic start, relative tolerance on the
// Rayleigh quotient. max_iter <= 0 means the default cap of 10*n.
EigenEstimate lambda_max_abs_info(const Graph& g, double p, double tol = 1e-6,
                                  int max_iter = 0);
double lambda_max_abs(const Graph& g, double p, double tol = 1e-6, int max_iter = 0);

bool connectivity(const Graph& g);
int min_degree(const Graph& g);

// corruption budget floor(eps * C(n,2) * p)
struct AdversaryBudget {
    double eps;
    int n;
    double p;
    long long budget;

    AdversaryBudget(double eps_, int n_, double p_);
};

// Plants a clique on k = floor(sqrt(2*budget)) random vertices (or k_override
// if positive), adding the missing edges in lexicographic order until the
// budget runs out.
Graph adversary_clique(RngStream& rng, const Graph& g, long long budget,
                       int k_override = -1);

// Toggles exactly `budget` distinct uniformly random pairs.
Graph adversary_random(RngStream& rng, const Graph& g, long long budget);

// Runs the coupling against g (treated as the ER side) and returns the
// realized geometric graph; its change count is the disagreement set size,
// no explicit budget. Guarded to n <= 2000 (quadratic-in-n, linear-in-d cost).
Graph adversary_coupling(RngStream& rng, const Graph& g, const CouplingConfig& cfg);

}  // namespace rgg
