#pragma once

#include <cstdint>
#include <vector>

#include "kochnet/domain.hpp"

namespace kochnet {

/// One Poisson realization of node positions inside a domain.
struct NodeSet {
    std::vector<Point2> points;
    double rho = 0.0;
    std::uint64_t seed = 0;
    int family = 2;
    double theta = 0.0;
};

/// Draws N ~ Poisson(rho * (2*y_max)^2) candidates uniform on the bounding
/// square and keeps those classified Inside; by Poisson thinning the retained
/// set is exactly a Poisson process of intensity rho on the domain.
/// Deterministic per (domain, rho, seed). Throws DomainError for rho < 0.
NodeSet sample_poisson_nodes(const FractalDomain& domain, double rho, std::uint64_t seed,
                             int max_depth = kDefaultMaxDepth);

}  // namespace kochnet
