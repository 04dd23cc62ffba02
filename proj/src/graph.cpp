#include "rggcouple/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rggcouple/errors.hpp"

namespace rgg {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > 5000) throw std::domain_error("Graph: n must be in [1, 5000]");
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    bits_.assign((pairs + 63) / 64, 0);
}

std::size_t Graph::pair_word(int i, int j, std::uint64_t* mask) const {
    if (i > j) std::swap(i, j);
    // linear index of (i,j), i<j, in row-major upper triangle
    std::size_t idx = static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i + 1) / 2 +
                      static_cast<std::size_t>(j - i - 1);
    *mask = 1ULL << (idx & 63);
    return idx >> 6;
}

bool Graph::edge(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::domain_error("Graph::edge: vertex out of range");
    if (i == j) return false;
    std::uint64_t mask;
    std::size_t w = pair_word(i, j, &mask);
    return (bits_[w] & mask) != 0;
}

void Graph::set_edge(int i, int j, bool value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::domain_error("Graph::set_edge: vertex out of range");
    if (i == j) throw std::domain_error("Graph::set_edge: no self-loops");
    std::uint64_t mask;
    std::size_t w = pair_word(i, j, &mask);
    if (value) bits_[w] |= mask;
    else bits_[w] &= ~mask;
}

long long Graph::edge_count() const {
    long long c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (int i = 0; i < n_; i++) {
        for (int j = i + 1; j < n_; j++) {
            if (edge(i, j)) {
                deg[i]++;
                deg[j]++;
            }
        }
    }
    return deg;
}

int Graph::degree(int v) const {
    int c = 0;
    for (int u = 0; u < n_; u++) {
        if (u != v && edge(v, u)) c++;
    }
    return c;
}

long long Graph::edge_difference(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) throw std::domain_error("edge_difference: size mismatch");
    long long c = 0;
    for (std::size_t w = 0; w < a.bits_.size(); w++) {
        c += std::popcount(a.bits_[w] ^ b.bits_[w]);
    }
    return c;
}

void write_graph_text(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int i = 0; i < g.n(); i++) {
        for (int j = i + 1; j < g.n(); j++) {
            if (g.edge(i, j)) out << i << ' ' << j << '\n';
        }
    }
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    write_graph_text(g, out);
    if (!out) throw FormatError("write failed: " + path);
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("graph: empty input");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m)) throw FormatError("graph: bad header line");
        std::string extra;
        if (hs >> extra) throw FormatError("graph: trailing tokens in header");
    }
    if (n < 1 || n > 5000) throw FormatError("graph: n out of range");
    if (m < 0 || m > n * (n - 1) / 2) throw FormatError("graph: m out of range");
    Graph g(static_cast<int>(n));
    long long prev_i = -1, prev_j = -1;
    for (long long e = 0; e < m; e++) {
        if (!std::getline(in, line)) throw FormatError("graph: fewer edge lines than m");
        std::istringstream es(line);
        long long i, j;
        if (!(es >> i >> j)) throw FormatError("graph: bad edge line " + std::to_string(e + 2));
        std::string extra;
        if (es >> extra) throw FormatError("graph: trailing tokens on edge line " + std::to_string(e + 2));
        if (i < 0 || j < 0 || i >= n || j >= n) throw FormatError("graph: vertex out of range on line " + std::to_string(e + 2));
        if (i >= j) throw FormatError("graph: edges must have i < j (line " + std::to_string(e + 2) + ")");
        if (i < prev_i || (i == prev_i && j <= prev_j))
            throw FormatError("graph: edges out of order (line " + std::to_string(e + 2) + ")");
        prev_i = i;
        prev_j = j;
        g.set_edge(static_cast<int>(i), static_cast<int>(j), true);
    }
    while (std::getline(in, line)) {
        if (!line.empty()) throw FormatError("graph: trailing non-empty lines");
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open: " + path);
    return read_graph_text(in);
}

}  // namespace rgg
