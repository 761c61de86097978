#pragma once

#include "kochnet/domain.hpp"

namespace kochnet {

struct VisibilityVerdict {
    bool blocked = false;
    // True when some branch reached the depth cap and fell back to the
    // base-chord approximation; the verdict is then accurate to ~r^max_depth.
    bool depth_exhausted = false;
};

/// Does the segment intersect the top edge curve? The segment is given in the
/// edge's frame (curve from (-1,1) to (1,1), band 1 <= y <= y_max).
VisibilityVerdict segment_hits_edge_curve(const FractalDomain& domain, Segment2 s,
                                          int max_depth = kDefaultMaxDepth);

/// True when the open segment pq crosses none of the four rotated edge curves.
bool line_of_sight(const FractalDomain& domain, Point2 p, Point2 q,
                   int max_depth = kDefaultMaxDepth);

/// line_of_sight with the exhaustion flag aggregated across the four edges.
VisibilityVerdict line_of_sight_verdict(const FractalDomain& domain, Point2 p, Point2 q,
                                        int max_depth = kDefaultMaxDepth);

}  // namespace kochnet
