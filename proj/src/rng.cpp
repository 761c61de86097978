#include "kochnet/rng.hpp"

#include <cmath>

namespace kochnet {

std::uint64_t poisson_draw(Rng& rng, double mean) {
    std::uint64_t total = 0;
    while (mean > 0.0) {
        const double chunk = std::min(mean, 32.0);
        const double threshold = std::exp(-chunk);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= rng.uniform01();
        } while (p > threshold);
        total += k - 1;
        mean -= chunk;
    }
    return total;
}

}  // namespace kochnet
