#pragma once

#include <cmath>

namespace kochnet {

// Tolerance for map round-trips and derived-constant cross-checks.
inline constexpr double kTolerance = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Segment2 {
    Point2 a;
    Point2 b;
};

inline Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance2(Point2 p, Point2 q) {
    const double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}
inline double distance(Point2 p, Point2 q) { return std::sqrt(distance2(p, q)); }

// Rotation by k quarter turns about the origin (exact: only swaps and negations).
inline Point2 rotate_quarter(Point2 p, int k) {
    switch (k & 3) {
        case 1: return {-p.y, p.x};
        case 2: return {-p.x, -p.y};
        case 3: return {p.y, -p.x};
        default: return p;
    }
}

}  // namespace kochnet
