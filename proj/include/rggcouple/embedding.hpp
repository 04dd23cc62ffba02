#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>

namespace rgg {

// n unit vectors in R^d, stored as the columns of a d x n matrix.
struct LatentEmbedding {
    Eigen::MatrixXd V;  // d rows, n columns

    int n() const { return static_cast<int>(V.cols()); }
    int d() const { return static_cast<int>(V.rows()); }
};

// Binary format: magic "RGGE", u32 n, u32 d (little endian), then n*d doubles
// little endian, column-major (one column per vector).
void write_embedding(const LatentEmbedding& e, std::ostream& out);
void write_embedding_file(const LatentEmbedding& e, const std::string& path);
LatentEmbedding read_embedding(std::istream& in);
LatentEmbedding read_embedding_file(const std::string& path);

}  // namespace rgg
