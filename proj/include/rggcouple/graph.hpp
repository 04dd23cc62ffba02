#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rgg {

// Simple undirected graph on {0..n-1}, no self-loops, dense bit-packed upper
// triangle. n is capped at 5000 (dense addressing; ~1.5 MB of bits at the cap).
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }

    bool edge(int i, int j) const;
    void set_edge(int i, int j, bool value);

    long long edge_count() const;
    std::vector<int> degrees() const;
    int degree(int v) const;

    // number of pairs on which the two graphs differ
    static long long edge_difference(const Graph& a, const Graph& b);

    bool operator==(const Graph& other) const = default;

private:
    std::size_t pair_word(int i, int j, std::uint64_t* mask) const;

    int n_;
    std::vector<std::uint64_t> bits_;
};

// Text format: first line "n m", then m lines "i j" with 0 <= i < j < n in
// strictly ascending lexicographic order, '\n' line ends.
void write_graph_text(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);

}  // namespace rgg
