#include "rggcouple/graphstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rgg {

Eigen::MatrixXd centered_dense(const Graph& g, double p) {
    int n = g.n();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; i++) {
        a(i, i) = 0.0;
        for (int j = i + 1; j < n; j++) {
            double v = (g.edge(i, j) ? 1.0 : 0.0) - p;
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return a;
}

Eigen::MatrixXd CenteredAdjacency::dense() const { return centered_dense(*g, p); }

double signed_triangles(const Graph& g, double p) {
    Eigen::MatrixXd a = centered_dense(g, p);
    Eigen::MatrixXd a2(g.n(), g.n());
    a2.noalias() = a * a;
    return a2.cwiseProduct(a).sum() / 6.0;
}

namespace {

// adjacency in CSR-ish form for fast repeated matvecs
struct EdgeList {
    int n;
    std::vector<int> offsets;
    std::vector<int> nbrs;

    explicit EdgeList(const Graph& g) : n(g.n()), offsets(g.n() + 1, 0) {
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (g.edge(i, j)) {
                    offsets[i + 1]++;
                    offsets[j + 1]++;
                }
            }
        }
        for (int i = 0; i < n; i++) offsets[i + 1] += offsets[i];
        nbrs.resize(offsets[n]);
        std::vector<int> cur(offsets.begin(), offsets.end() - 1);
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (g.edge(i, j)) {
                    nbrs[cur[i]++] = j;
                    nbrs[cur[j]++] = i;
                }
            }
        }
    }

    // y = (G - p(J - I)) x
    void apply(double p, const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
        double s = x.sum();
        for (int i = 0; i < n; i++) {
            double acc = 0.0;
            for (int k = offsets[i]; k < offsets[i + 1]; k++) acc += x[nbrs[k]];
            y[i] = acc - p * (s - x[i]);
        }
    }
};

}  // namespace

EigenEstimate lambda_max_abs_info(const Graph& g, double p, double tol, int max_iter) {
    int n = g.n();
    if (n == 1) return {0.0, 0, true};
    if (max_iter <= 0) max_iter = 10 * n;
    EdgeList el(g);
    RngStream rng(0x5EEDBA5EULL);  // fixed: estimates are a pure function of g, p
    Eigen::VectorXd x(n), y(n), z(n);
    for (int i = 0; i < n; i++) x[i] = rng.normal();
    x.normalize();
    double lam2 = 0.0, prev = -1.0;
    int it = 0;
    bool converged = false;
    for (; it < max_iter; it++) {
        el.apply(p, x, y);
        el.apply(p, y, z);  // z = A^2 x
        lam2 = x.dot(z);
        double nz = z.norm();
        if (nz == 0.0) { lam2 = 0.0; converged = true; break; }
        x = z / nz;
        if (prev >= 0.0 && std::fabs(lam2 - prev) <= tol * std::max(std::fabs(lam2), 1e-300)) {
            converged = true;
            it++;
            break;
        }
        prev = lam2;
    }
    return {std::sqrt(std::max(lam2, 0.0)), it, converged};
}

double lambda_max_abs(const Graph& g, double p, double tol, int max_iter) {
    return lambda_max_abs_info(g, p, tol, max_iter).value;
}

bool connectivity(const Graph& g) {
    int n = g.n();
    std::vector<int> stack = {0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; u++) {
            if (!seen[u] && g.edge(v, u)) {
                seen[u] = 1;
                count++;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

int min_degree(const Graph& g) {
    std::vector<int> deg = g.degrees();
    int m = deg[0];
    for (int d : deg) m = std::min(m, d);
    return m;
}

AdversaryBudget::AdversaryBudget(double eps_, int n_, double p_)
    : eps(eps_), n(n_), p(p_) {
    if (eps < 0.0) throw std::domain_error("AdversaryBudget: eps must be >= 0");
    double pairs = static_cast<double>(n_) * (n_ - 1) / 2.0;
    budget = static_cast<long long>(std::floor(eps_ * pairs * p_));
}

Graph adversary_clique(RngStream& rng, const Graph& g, long long budget, int k_override) {
    Graph out = g;
    if (budget <= 0) return out;
    int n = g.n();
    int k = k_override > 0 ? k_override
                           : static_cast<int>(std::floor(std::sqrt(2.0 * static_cast<double>(budget))));
    k = std::min(k, n);
    if (k < 2) return out;
    // partial Fisher-Yates for k distinct vertices
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    for (int i = 0; i < k; i++) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(perm[i], perm[j]);
    }
    std::vector<int> verts(perm.begin(), perm.begin() + k);
    std::sort(verts.begin(), verts.end());
    long long used = 0;
    for (int a = 0; a < k && used < budget; a++) {
        for (int b = a + 1; b < k && used < budget; b++) {
            if (!out.edge(verts[a], verts[b])) {
                out.set_edge(verts[a], verts[b], true);
                used++;
            }
        }
    }
    return out;
}

Graph adversary_random(RngStream& rng, const Graph& g, long long budget) {
    int n = g.n();
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (budget < 0 || budget > pairs)
        throw std::domain_error("adversary_random: budget outside [0, C(n,2)]");
    Graph out = g;
    std::vector<char> used(static_cast<std::size_t>(pairs), 0);
    long long done = 0;
    while (done < budget) {
        std::uint64_t idx = rng.below(static_cast<std::uint64_t>(pairs));
        if (used[idx]) continue;
        used[idx] = 1;
        // invert the pair index
        int i = 0;
        long long base = 0;
        while (base + (n - 1 - i) <= static_cast<long long>(idx)) {
            base += n - 1 - i;
            i++;
        }
        int j = i + 1 + static_cast<int>(idx - base);
        out.set_edge(i, j, !out.edge(i, j));
        done++;
    }
    return out;
}

Graph adversary_coupling(RngStream& rng, const Graph& g, const CouplingConfig& cfg) {
    if (g.n() > 2000) throw std::domain_error("adversary_coupling: n > 2000 guard");
    CouplingConfig c = cfg;
    c.n = g.n();
    c.record_drift = false;
    CouplingOutput out = couple(rng, g, c);
    return out.realized;
}

}  // namespace rgg
