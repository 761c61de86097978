#pragma once

#include <cstdint>
#include <random>

namespace kochnet {

// SplitMix64 finalizer; used only for seed derivation, never as the stream.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Per-trial seed: splitmix64(splitmix64(master + GOLDEN*(row+1)) + trial).
/// Pure function of (master seed, row index, trial index), so trial results do
/// not depend on execution order or worker count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t row, std::uint64_t trial) {
    return splitmix64(splitmix64(master + 0x9E3779B97F4A7C15ULL * (row + 1)) + trial);
}

/// Reproducible generator: std::mt19937_64 (stream fixed by the standard) with
/// hand-rolled output transforms, since the std distributions are
/// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

/// Poisson draw by chunked multiplicative search (chunks of mean <= 32, so the
/// thresholds exp(-chunk) never underflow); exact for any finite mean >= 0.
std::uint64_t poisson_draw(Rng& rng, double mean);

}  // namespace kochnet
