#include "kochnet/sampling.hpp"

#include <cmath>
#include <vector>

#include "kochnet/membership.hpp"
#include "kochnet/rng.hpp"

namespace kochnet {

NodeSet sample_poisson_nodes(const FractalDomain& domain, double rho, std::uint64_t seed,
                             int max_depth) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) {
        throw DomainError("rho must be non-negative and finite");
    }
    NodeSet out;
    out.rho = rho;
    out.seed = seed;
    out.family = domain.family();
    out.theta = domain.spec.theta;

    const double half = domain.bounding_half();
    const double square_area = (2.0 * half) * (2.0 * half);
    Rng rng(seed);
    const std::uint64_t candidates = poisson_draw(rng, rho * square_area);
    if (candidates == 0) return out;

    std::vector<double> xs(candidates), ys(candidates);
    for (std::uint64_t i = 0; i < candidates; ++i) {
        // x then y, in draw order; the retained subsequence keeps this order
        xs[i] = rng.uniform(-half, half);
        ys[i] = rng.uniform(-half, half);
    }
    std::vector<std::uint8_t> inside(candidates);
    const MembershipParams params = membership_params(domain);
    select_classify_fn()(params, xs.data(), ys.data(), candidates, max_depth, inside.data());

    for (std::uint64_t i = 0; i < candidates; ++i) {
        if (inside[i]) out.points.push_back({xs[i], ys[i]});
    }
    return out;
}

}  // namespace kochnet
