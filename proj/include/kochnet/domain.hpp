#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kochnet/geometry.hpp"
#include "kochnet/similarity.hpp"

namespace kochnet {

struct VertexBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxDepth = 64;
inline constexpr std::size_t kDefaultVertexBudget = std::size_t{1} << 24;

/// Family n in {2, 3} and opening angle theta (radians).
/// Valid angle range is the open interval (0, pi/(2n)); a 1e-6 guard margin is
/// enforced at the upper end where the curve approaches self-contact.
struct FractalSpec {
    int family = 2;
    double theta = 0.0;
};

enum class Membership { Inside, Outside };

/// One edge-curve construction plus the constants derived from it.
/// Immutable after derive_domain; safe to share across threads.
struct FractalDomain {
    FractalSpec spec;
    double r = 0.0;       // common contraction factor sin(theta)/sin(n*theta)
    double D = 0.0;       // similarity dimension, n * r^D = 1
    double V = 0.0;       // enclosed area
    double y_max = 0.0;   // top of the band containing the edge curve
    Point2 circle_center; // centre O of the construction circle
    double circle_radius = 0.0;
    std::vector<SimilarityMap> maps;   // n maps, base chord -> i-th sub-chord
    std::vector<Point2> base_points;   // P_0..P_n on the circle, P_0=(-1,1), P_n=(1,1)

    int family() const { return spec.family; }
    // Half-side of the axis-aligned bounding square of the whole domain.
    double bounding_half() const { return y_max; }
};

/// Builds the domain for a validated spec; throws DomainError for theta outside
/// the family's open interval.
FractalDomain derive_domain(FractalSpec spec);

/// Rotates p by k quarter turns (k in 0..3, smallest k preferred) so that the
/// result satisfies |x| <= y. (0,0) returns k = 0.
std::pair<Point2, int> fold_to_top(Point2 p);

/// Index of the angular sector at the construction-circle centre containing p;
/// points exactly on a dividing ray go to the lower index.
int region_index(const FractalDomain& domain, Point2 p);

/// Fold-and-recurse point classification; max_depth bounds the number of
/// inverse-map applications, after which the remaining curve piece is
/// approximated by its base chord.
Membership contains(const FractalDomain& domain, Point2 p, int max_depth = kDefaultMaxDepth);

/// Level-m polyline of the top edge curve, n^m + 1 vertices in traversal order
/// from (-1,1) to (1,1). Throws VertexBudgetError when the level would exceed
/// the vertex budget.
std::vector<Point2> curve_polyline(const FractalDomain& domain, int level,
                                   std::size_t vertex_budget = kDefaultVertexBudget);

/// Closed boundary polyline: the four rotated copies of the edge curve in
/// traversal order (top, right, bottom, left); first vertex repeated at the end.
std::vector<Point2> domain_boundary_polyline(const FractalDomain& domain, int level,
                                             std::size_t vertex_budget = kDefaultVertexBudget);

}  // namespace kochnet
