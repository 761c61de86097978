#pragma once

#include <stdexcept>

#include "kochnet/geometry.hpp"

namespace kochnet {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A direct (orientation-preserving) plane similarity: p |-> scale * R(rotation) * p + translation.
/// side_flip records whether the map exchanges the inside/outside of the region
/// relative to the directed base chord; it does not affect the point transform.
class SimilarityMap {
  public:
    SimilarityMap(double scale, double rotation, Point2 translation, bool side_flip);

    Point2 apply(Point2 p) const {
        return {fa_ * p.x - fb_ * p.y + trans_.x, fb_ * p.x + fa_ * p.y + trans_.y};
    }

    Point2 inverse_apply(Point2 p) const {
        const double dx = p.x - trans_.x, dy = p.y - trans_.y;
        return {ia_ * dx + ib_ * dy, -ib_ * dx + ia_ * dy};
    }

    double scale() const { return scale_; }
    double rotation() const { return rotation_; }
    Point2 translation() const { return trans_; }
    bool side_flip() const { return flip_; }

    SimilarityMap with_side_flip(bool flip) const {
        SimilarityMap m = *this;
        m.flip_ = flip;
        return m;
    }

    // Inverse linear coefficients, exposed for the flattened membership kernels.
    double inv_a() const { return ia_; }
    double inv_b() const { return ib_; }

  private:
    double scale_, rotation_;
    Point2 trans_;
    bool flip_;
    double fa_, fb_;  // scale * cos, scale * sin
    double ia_, ib_;  // cos / scale, sin / scale
};

/// The unique direct similarity sending p1 -> q1 and p2 -> q2.
/// Throws DomainError when p1 == p2 or when q1 == q2 (zero scale).
SimilarityMap similarity_from_pairs(Point2 p1, Point2 q1, Point2 p2, Point2 q2);

}  // namespace kochnet
