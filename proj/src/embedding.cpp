#include "rggcouple/embedding.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "rggcouple/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "embedding IO assumes a little-endian host");

namespace rgg {

namespace {
constexpr char kMagic[4] = {'R', 'G', 'G', 'E'};
}

void write_embedding(const LatentEmbedding& e, std::ostream& out) {
    std::uint32_t n = static_cast<std::uint32_t>(e.n());
    std::uint32_t d = static_cast<std::uint32_t>(e.d());
    out.write(kMagic, 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&d), 4);
    // Eigen is column-major by default, so the buffer is already in file order
    out.write(reinterpret_cast<const char*>(e.V.data()),
              static_cast<std::streamsize>(sizeof(double) * e.V.size()));
    if (!out) throw FormatError("embedding: write failed");
}

void write_embedding_file(const LatentEmbedding& e, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    write_embedding(e, out);
}

LatentEmbedding read_embedding(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("embedding: bad magic");
    std::uint32_t n = 0, d = 0;
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&d), 4);
    if (!in) throw FormatError("embedding: truncated header");
    if (n == 0 || d == 0 || n > 1000000 || d > 16777216)
        throw FormatError("embedding: implausible dimensions");
    LatentEmbedding e;
    e.V.resize(d, n);
    in.read(reinterpret_cast<char*>(e.V.data()),
            static_cast<std::streamsize>(sizeof(double) * e.V.size()));
    if (!in) throw FormatError("embedding: truncated data");
    char extra;
    if (in.read(&extra, 1)) throw FormatError("embedding: trailing bytes");
    return e;
}

LatentEmbedding read_embedding_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open: " + path);
    return read_embedding(in);
}

}  // namespace rgg
