#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace mlselect {

// SplitMix64 generator. Every stochastic step in the toolkit draws from this
// generator so that runs are bit-identical across platforms and across any
// degree of model-level concurrency. The exact update is part of the file
// format contract (splits and reports depend on it):
//
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Plain modulo; the bias is negligible for the n used
    // here and keeping the draw single-step keeps it reproducible elsewhere.
    std::uint64_t bounded(std::uint64_t n) { return next() % n; }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Fisher-Yates, iterating from the back with bounded draws.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// FNV-1a over a byte string.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Seed for a named sub-computation (one model of the grid, one base model of
// a stack). Independent of scheduling, so concurrent fits reproduce the
// sequential results.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view name) {
    return SplitMix64(master ^ fnv1a64(name)).next();
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64(master ^ (0x9E3779B97F4A7C15ULL * (index + 1))).next();
}

} // namespace mlselect
