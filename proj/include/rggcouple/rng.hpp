#pragma once

#include <cstdint>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <random>

namespace rgg {

// All randomness flows through RngStream so that results are reproducible:
// a master seed plus a list of integer labels (stream kind, trial index,
// round index, ...) pins down every draw independently of thread scheduling.
// std::mt19937_64 is fully specified by the standard; the uniform/normal
// transformations below are hand-rolled because the std distribution objects
// are implementation-defined and would not reproduce across stdlibs.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Well-separated 64-bit seed from a master seed and a label path.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> labels) {
    std::uint64_t s = master ^ 0xC2B2AE3D27D4EB4FULL;
    std::uint64_t h = splitmix64(s);
    for (std::uint64_t lab : labels) {
        s ^= lab + 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
        h ^= splitmix64(s);
    }
    return h;
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    // [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    // (0, 1), never returns an exact endpoint (safe under log())
    double uniform_open() {
        return (static_cast<double>(bits() >> 12) + 0.5) * 0x1.0p-52;
    }

    double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; the second variate is cached, so the draw count per call
    // alternates 2,0,2,0,... deterministically.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_open();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // integer in [0, bound), bound >= 1, rejection-free modulo bias is
    // negligible for bound << 2^64 but we reject anyway to keep draws exact
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = bits();
            if (r >= threshold) return r % bound;
        }
    }

    // Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape < 1 goes through the
    // boost gamma(shape) = gamma(shape+1) * U^{1/shape}. Draw count varies
    // per call but depends only on the stream state, so sequences stay
    // reproducible.
    double gamma(double shape) {
        if (!(shape > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        if (shape < 1.0) {
            double u = uniform_open();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = uniform_open();
            double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double chi_square(double dof) { return 2.0 * gamma(0.5 * dof); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline RngStream derive_stream(std::uint64_t master,
                               std::initializer_list<std::uint64_t> labels) {
    return RngStream(derive_seed(master, labels));
}

// Stream kind labels. Every module that consumes randomness derives its
// streams through one of these so no two call sites ever share a stream.
namespace stream {
inline constexpr std::uint64_t er_graph = 1;       // ER edge bits
inline constexpr std::uint64_t embedding = 2;      // latent vectors
inline constexpr std::uint64_t round_bits = 3;     // per-round flip bits
inline constexpr std::uint64_t directions = 4;     // fixed test directions
inline constexpr std::uint64_t adversary = 5;
inline constexpr std::uint64_t witness = 6;        // ascent restarts
inline constexpr std::uint64_t threshold_exp = 7;
inline constexpr std::uint64_t fkg = 8;
inline constexpr std::uint64_t scaling = 9;
inline constexpr std::uint64_t roc = 10;
inline constexpr std::uint64_t calibration = 11;
inline constexpr std::uint64_t audit = 12;
}  // namespace stream

}  // namespace rgg
