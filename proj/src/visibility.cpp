#include "kochnet/visibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace kochnet {

namespace {

struct Frame {
    double y_max;
    Point2 O;
    // rays through P_0..P_n from O; [0] and [n] bound the wedge, the rest divide it
    std::array<Point2, 4> ray;
    int n;
    const SimilarityMap* maps;
};

Frame make_frame(const FractalDomain& dom) {
    Frame f{dom.y_max, dom.circle_center, {}, dom.family(), dom.maps.data()};
    for (int k = 0; k <= f.n; ++k) f.ray[k] = dom.base_points[k] - dom.circle_center;
    return f;
}

inline double ray_side(const Frame& f, int k, Point2 p) {
    return cross(f.ray[k], p - f.O);
}

inline bool in_wedge(const Frame& f, Point2 p) {
    return ray_side(f, 0, p) <= 0.0 && ray_side(f, f.n, p) >= 0.0;
}

// Segment against the base chord y = 1, x in [-1, 1].
bool chord_cross(Point2 a, Point2 b) {
    const double fa = a.y - 1.0, fb = b.y - 1.0;
    if (fa * fb > 0.0) return false;
    if (fa == 0.0 && fb == 0.0) {
        return std::min(a.x, b.x) <= 1.0 && std::max(a.x, b.x) >= -1.0;
    }
    const double t = fa / (fa - fb);
    const double x = a.x + t * (b.x - a.x);
    return x >= -1.0 && x <= 1.0;
}

struct Item {
    Point2 a, b;
    int depth;
};

/// Core recursion on one edge frame, iterative with an explicit stack.
bool hits_edge(const Frame& f, Segment2 s, int max_depth, bool& exhausted,
               std::vector<Item>& stack) {
    stack.clear();
    stack.push_back({s.a, s.b, max_depth});
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const Point2 a = it.a, b = it.b;

        const double ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
        if (yhi < 1.0 || ylo > f.y_max) continue;
        if (std::max(a.x, b.x) < -1.0 || std::min(a.x, b.x) > 1.0) continue;

        if (ylo < 1.0 && yhi > f.y_max) {
            // full band crossing; blocked when it happens inside the wedge
            const Point2 lo = (a.y < b.y) ? a : b;
            const Point2 hi = (a.y < b.y) ? b : a;
            const double t1 = (1.0 - lo.y) / (hi.y - lo.y);
            const double t2 = (f.y_max - lo.y) / (hi.y - lo.y);
            const Point2 c1{lo.x + t1 * (hi.x - lo.x), 1.0};
            const Point2 c2{lo.x + t2 * (hi.x - lo.x), f.y_max};
            if (in_wedge(f, c1) && in_wedge(f, c2)) return true;
        }

        if (it.depth == 0) {
            exhausted = true;
            if (chord_cross(a, b)) return true;
            continue;
        }

        // split at the internal sector rays, then map each piece into the
        // frame of its sub-curve
        double ts[4] = {0.0, 1.0, 0.0, 0.0};
        int nt = 2;
        for (int k = 1; k < f.n; ++k) {
            const double fa = ray_side(f, k, a);
            const double fb = ray_side(f, k, b);
            if ((fa < 0.0) != (fb < 0.0)) {
                ts[nt++] = fa / (fa - fb);
            }
        }
        std::sort(ts, ts + nt);
        for (int j = 0; j + 1 < nt; ++j) {
            const double t0 = ts[j], t1 = ts[j + 1];
            if (!(t1 > t0)) continue;
            const Point2 pa{a.x + t0 * (b.x - a.x), a.y + t0 * (b.y - a.y)};
            const Point2 pb{a.x + t1 * (b.x - a.x), a.y + t1 * (b.y - a.y)};
            if (distance2(pa, pb) < 1e-24) continue;  // drop slivers at tangencies
            const Point2 mid{0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)};
            const Point2 d = mid - f.O;
            int i = f.n - 1;
            for (int k = 0; k + 1 < f.n; ++k) {
                if (cross(f.ray[k + 1], d) >= 0.0) {
                    i = k;
                    break;
                }
            }
            stack.push_back({f.maps[i].inverse_apply(pa), f.maps[i].inverse_apply(pb),
                             it.depth - 1});
        }
    }
    return false;
}

thread_local std::vector<Item> tl_stack;

}  // namespace

VisibilityVerdict segment_hits_edge_curve(const FractalDomain& domain, Segment2 s,
                                          int max_depth) {
    const Frame f = make_frame(domain);
    VisibilityVerdict v;
    v.blocked = hits_edge(f, s, max_depth, v.depth_exhausted, tl_stack);
    return v;
}

VisibilityVerdict line_of_sight_verdict(const FractalDomain& domain, Point2 p, Point2 q,
                                        int max_depth) {
    const Frame f = make_frame(domain);
    VisibilityVerdict v;
    for (int k = 0; k < 4; ++k) {
        // rotating the segment by +k quarter turns tests the edge at -k turns
        const Segment2 s{rotate_quarter(p, k), rotate_quarter(q, k)};
        if (hits_edge(f, s, max_depth, v.depth_exhausted, tl_stack)) {
            v.blocked = true;
            return v;
        }
    }
    return v;
}

bool line_of_sight(const FractalDomain& domain, Point2 p, Point2 q, int max_depth) {
    return !line_of_sight_verdict(domain, p, q, max_depth).blocked;
}

}  // namespace kochnet
