#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kochnet/domain.hpp"
#include "kochnet/sampling.hpp"

namespace kochnet {

struct Edge {
    std::uint32_t a = 0;
    std::uint32_t b = 0;  // a < b
    friend bool operator==(Edge lhs, Edge rhs) { return lhs.a == rhs.a && lhs.b == rhs.b; }
};

/// LOS-range graph: every edge satisfies distance <= r0 and line_of_sight.
struct Network {
    std::size_t node_count = 0;
    std::vector<Edge> edges;  // sorted (a, b), no duplicates
    double r0 = 1.0;
    std::size_t depth_exhausted_count = 0;  // LOS evaluations that hit the depth cap
};

struct ConnectivityReport {
    bool fully_connected = true;
    std::size_t component_count = 0;
    std::size_t isolated_count = 0;
    std::size_t node_count = 0;
};

/// Builds the full edge list. Candidate pairs come from a uniform grid with
/// cell size exactly r0 (3x3 neighbourhood scan); the edge list is assembled
/// in canonical sorted order. Throws DomainError for r0 <= 0.
Network build_network(const FractalDomain& domain, const NodeSet& nodes, double r0 = 1.0,
                      int max_depth = kDefaultMaxDepth);

/// Component structure by disjoint-set union over the edges. Zero or one node
/// counts as fully connected.
ConnectivityReport analyze(const Network& net);

/// Same report as analyze(build_network(...)) without materializing the edge
/// list: pairs already in one component skip the LOS test, which changes
/// neither the final partition nor the degree-0 count. When exhausted_tests is
/// non-null it receives the number of evaluated LOS tests that hit the depth
/// cap (evaluated pairs only).
ConnectivityReport connectivity_report(const FractalDomain& domain, const NodeSet& nodes,
                                       double r0 = 1.0, int max_depth = kDefaultMaxDepth,
                                       std::size_t* exhausted_tests = nullptr);

/// Interior estimate of the expected number of isolated nodes,
/// rho * V * exp(-rho * pi * r0^2). Ignores boundary-area loss by design.
double expected_isolated(const FractalDomain& domain, double rho, double r0 = 1.0);

}  // namespace kochnet
