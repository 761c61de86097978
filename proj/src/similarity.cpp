#include "kochnet/similarity.hpp"

#include <cmath>

namespace kochnet {

SimilarityMap::SimilarityMap(double scale, double rotation, Point2 translation, bool side_flip)
    : scale_(scale), rotation_(rotation), trans_(translation), flip_(side_flip) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("similarity scale must be positive and finite");
    }
    const double c = std::cos(rotation), s = std::sin(rotation);
    fa_ = scale * c;
    fb_ = scale * s;
    ia_ = c / scale;
    ib_ = s / scale;
}

SimilarityMap similarity_from_pairs(Point2 p1, Point2 q1, Point2 p2, Point2 q2) {
    const Point2 dp = p2 - p1;
    const Point2 dq = q2 - q1;
    if (dp.x == 0.0 && dp.y == 0.0) {
        throw DomainError("similarity_from_pairs: source points coincide");
    }
    if (dq.x == 0.0 && dq.y == 0.0) {
        throw DomainError("similarity_from_pairs: image points coincide (zero scale)");
    }
    // alpha = (q2 - q1) / (p2 - p1) in complex arithmetic.
    const double den = dp.x * dp.x + dp.y * dp.y;
    const double ax = (dq.x * dp.x + dq.y * dp.y) / den;
    const double ay = (dq.y * dp.x - dq.x * dp.y) / den;
    const double scale = std::hypot(ax, ay);
    const double rotation = std::atan2(ay, ax);
    // beta = q1 - alpha * p1
    const Point2 translation{q1.x - (ax * p1.x - ay * p1.y), q1.y - (ay * p1.x + ax * p1.y)};
    return SimilarityMap(scale, rotation, translation, false);
}

}  // namespace kochnet
