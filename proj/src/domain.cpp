#include "kochnet/domain.hpp"

#include <cmath>
#include <string>

#include "kochnet/membership.hpp"

namespace kochnet {

namespace {

constexpr double kUpperGuard = 1e-6;  // keep away from the space-filling limit

double theta_upper(int family) { return M_PI / (2.0 * family); }

void validate(const FractalSpec& spec) {
    if (spec.family != 2 && spec.family != 3) {
        throw DomainError("family must be 2 or 3");
    }
    const double hi = theta_upper(spec.family) - kUpperGuard;
    if (!(spec.theta > 0.0) || !(spec.theta <= hi) || !std::isfinite(spec.theta)) {
        throw DomainError("theta for F" + std::to_string(spec.family) +
                          " must lie in (0, " + std::to_string(theta_upper(spec.family)) +
                          ") with a 1e-6 margin below the upper end");
    }
}

// Composed direct similarity as plain affine coefficients:
// (x,y) -> (a*x - b*y + tx, b*x + a*y + ty).
struct Affine {
    double a = 1.0, b = 0.0, tx = 0.0, ty = 0.0;

    Point2 apply(Point2 p) const { return {a * p.x - b * p.y + tx, b * p.x + a * p.y + ty}; }

    Affine then_inner(const SimilarityMap& m) const {
        // this o m
        const double ma = m.scale() * std::cos(m.rotation());
        const double mb = m.scale() * std::sin(m.rotation());
        const Point2 t = apply(m.translation());
        return {a * ma - b * mb, b * ma + a * mb, t.x, t.y};
    }
};

void emit_curve(const FractalDomain& dom, const Affine& t, bool reversed, int level,
                std::vector<Point2>& out) {
    if (level == 0) {
        const Point2 first = t.apply(dom.base_points[reversed ? dom.maps.size() : 0]);
        const Point2 second = t.apply(dom.base_points[reversed ? 0 : dom.maps.size()]);
        if (out.empty()) out.push_back(first);
        out.push_back(second);
        return;
    }
    const int n = static_cast<int>(dom.maps.size());
    for (int k = 0; k < n; ++k) {
        const int i = reversed ? n - 1 - k : k;
        emit_curve(dom, t.then_inner(dom.maps[i]), reversed ^ dom.maps[i].side_flip(), level - 1,
                   out);
    }
}

}  // namespace

FractalDomain derive_domain(FractalSpec spec) {
    validate(spec);
    const int n = spec.family;
    const double theta = spec.theta;

    FractalDomain dom;
    dom.spec = spec;
    dom.r = std::sin(theta) / std::sin(n * theta);
    dom.D = (n == 2) ? std::log(2.0) / std::log(2.0 * std::cos(theta))
                     : std::log(3.0) / std::log(4.0 * std::cos(theta) * std::cos(theta) - 1.0);
    const double v_n =
        (n == 2) ? std::sin(2.0 * theta) / (2.0 + std::cos(2.0 * theta))
                 : 2.0 * std::pow(std::sin(2.0 * theta), 3) /
                       (std::pow(std::sin(3.0 * theta), 2) + std::pow(std::sin(theta), 2));
    dom.V = 4.0 + 4.0 * v_n;
    dom.y_max = 1.0 + std::tan((n - 1) * theta);
    dom.circle_radius = 1.0 / std::sin(n * theta);
    dom.circle_center = {0.0, 1.0 - std::cos(n * theta) / std::sin(n * theta)};

    dom.base_points.resize(n + 1);
    dom.base_points[0] = {-1.0, 1.0};
    dom.base_points[n] = {1.0, 1.0};
    for (int k = 1; k < n; ++k) {
        const double phi = (2.0 * k - n) * theta;  // angle from +y axis, clockwise positive
        dom.base_points[k] = {dom.circle_center.x + dom.circle_radius * std::sin(phi),
                              dom.circle_center.y + dom.circle_radius * std::cos(phi)};
    }

    const auto& P = dom.base_points;
    dom.maps.reserve(n);
    if (n == 2) {
        dom.maps.push_back(similarity_from_pairs(P[0], P[1], P[2], P[0]).with_side_flip(true));
        dom.maps.push_back(similarity_from_pairs(P[0], P[2], P[2], P[1]).with_side_flip(true));
    } else {
        dom.maps.push_back(similarity_from_pairs(P[0], P[1], P[3], P[0]).with_side_flip(true));
        dom.maps.push_back(similarity_from_pairs(P[0], P[1], P[3], P[2]).with_side_flip(false));
        dom.maps.push_back(similarity_from_pairs(P[0], P[3], P[3], P[2]).with_side_flip(true));
    }
    return dom;
}

std::pair<Point2, int> fold_to_top(Point2 p) {
    Point2 q = p;
    for (int k = 0; k < 4; ++k) {
        if (std::fabs(q.x) <= q.y) return {q, k};
        q = {-q.y, q.x};
    }
    return {p, 0};  // only (0,0) and non-finite input reach here
}

int region_index(const FractalDomain& domain, Point2 p) {
    const Point2 d = p - domain.circle_center;
    const int n = domain.family();
    for (int i = 0; i + 1 < n; ++i) {
        const Point2 u = domain.base_points[i + 1] - domain.circle_center;
        if (cross(u, d) >= 0.0) return i;
    }
    return n - 1;
}

Membership contains(const FractalDomain& domain, Point2 p, int max_depth) {
    const MembershipParams params = membership_params(domain);
    std::uint8_t inside = 0;
    classify_batch_scalar(params, &p.x, &p.y, 1, max_depth, &inside);
    return inside ? Membership::Inside : Membership::Outside;
}

std::vector<Point2> curve_polyline(const FractalDomain& domain, int level,
                                   std::size_t vertex_budget) {
    if (level < 0) throw DomainError("polyline level must be >= 0");
    const double count = std::pow(static_cast<double>(domain.family()), level) + 1.0;
    if (count > static_cast<double>(vertex_budget)) {
        throw VertexBudgetError("curve_polyline: level " + std::to_string(level) +
                                " exceeds the vertex budget");
    }
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(count));
    emit_curve(domain, Affine{}, false, level, out);
    // endpoints are the exact base chord corners; undo map round-off there
    out.front() = domain.base_points.front();
    out.back() = domain.base_points.back();
    return out;
}

std::vector<Point2> domain_boundary_polyline(const FractalDomain& domain, int level,
                                             std::size_t vertex_budget) {
    if (level < 0) throw DomainError("polyline level must be >= 0");
    const double count = 4.0 * std::pow(static_cast<double>(domain.family()), level) + 1.0;
    if (count > static_cast<double>(vertex_budget)) {
        throw VertexBudgetError("domain_boundary_polyline: level " + std::to_string(level) +
                                " exceeds the vertex budget");
    }
    const std::vector<Point2> top = curve_polyline(domain, level, vertex_budget);
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(count));
    // Traversal order top, right, bottom, left: copy k is the top curve rotated
    // by -k*pi/2, sharing one corner vertex with its predecessor.
    for (int k = 0; k < 4; ++k) {
        const std::size_t start = (k == 0) ? 0 : 1;
        for (std::size_t i = start; i < top.size(); ++i) {
            out.push_back(rotate_quarter(top[i], 4 - k));
        }
    }
    return out;
}

}  // namespace kochnet
