#include "kochnet/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "kochnet/membership.hpp"
#include "kochnet/visibility.hpp"

namespace kochnet {

namespace {

struct DisjointSet {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit DisjointSet(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

// Uniform grid over the node bounding box, cell size exactly r0, nodes binned
// by floor(coordinate / r0). CSR layout with cell-ordered coordinate arrays so
// the distance kernel can run on contiguous slices.
struct CellGrid {
    double r0;
    long cx0 = 0, cy0 = 0;
    std::size_t nx = 0, ny = 0;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> items;   // node ids in cell order
    std::vector<double> xs, ys;         // coordinates in items order

    CellGrid(const std::vector<Point2>& pts, double r) : r0(r) {
        if (pts.empty()) return;
        std::vector<long> cxs(pts.size()), cys(pts.size());
        long cx1 = 0, cy1 = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cxs[i] = static_cast<long>(std::floor(pts[i].x / r0));
            cys[i] = static_cast<long>(std::floor(pts[i].y / r0));
            if (i == 0) {
                cx0 = cx1 = cxs[0];
                cy0 = cy1 = cys[0];
            } else {
                cx0 = std::min(cx0, cxs[i]);
                cx1 = std::max(cx1, cxs[i]);
                cy0 = std::min(cy0, cys[i]);
                cy1 = std::max(cy1, cys[i]);
            }
        }
        nx = static_cast<std::size_t>(cx1 - cx0 + 1);
        ny = static_cast<std::size_t>(cy1 - cy0 + 1);
        offsets.assign(nx * ny + 1, 0);
        for (std::size_t i = 0; i < pts.size(); ++i) ++offsets[cell_index(cxs[i], cys[i]) + 1];
        for (std::size_t c = 1; c < offsets.size(); ++c) offsets[c] += offsets[c - 1];
        items.resize(pts.size());
        xs.resize(pts.size());
        ys.resize(pts.size());
        std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::uint32_t slot = cursor[cell_index(cxs[i], cys[i])]++;
            items[slot] = static_cast<std::uint32_t>(i);
            xs[slot] = pts[i].x;
            ys[slot] = pts[i].y;
        }
    }

    std::size_t cell_index(long cx, long cy) const {
        return static_cast<std::size_t>(cy - cy0) * nx + static_cast<std::size_t>(cx - cx0);
    }

    // Calls fn(i, j) once for every unordered pair with j > i and
    // distance(i, j) <= r0.
    template <typename Fn>
    void for_pairs_in_range(const std::vector<Point2>& pts, Fn&& fn) const {
        const DistanceMaskFn dist_mask = select_distance_mask_fn();
        std::vector<std::uint8_t> keep;
        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            const long cx = static_cast<long>(std::floor(pts[i].x / r0));
            const long cy = static_cast<long>(std::floor(pts[i].y / r0));
            for (long dy = -1; dy <= 1; ++dy) {
                const long ncy = cy + dy;
                if (ncy < cy0 || ncy >= cy0 + static_cast<long>(ny)) continue;
                for (long dx = -1; dx <= 1; ++dx) {
                    const long ncx = cx + dx;
                    if (ncx < cx0 || ncx >= cx0 + static_cast<long>(nx)) continue;
                    const std::size_t c = cell_index(ncx, ncy);
                    const std::uint32_t lo = offsets[c], hi = offsets[c + 1];
                    if (lo == hi) continue;
                    keep.resize(hi - lo);
                    dist_mask(pts[i].x, pts[i].y, xs.data() + lo, ys.data() + lo, hi - lo, r0,
                              keep.data());
                    for (std::uint32_t s = lo; s < hi; ++s) {
                        const std::uint32_t j = items[s];
                        if (j > i && keep[s - lo]) fn(i, j);
                    }
                }
            }
        }
    }
};

}  // namespace

Network build_network(const FractalDomain& domain, const NodeSet& nodes, double r0,
                      int max_depth) {
    if (!(r0 > 0.0)) throw DomainError("connection range r0 must be positive");
    Network net;
    net.node_count = nodes.points.size();
    net.r0 = r0;
    if (net.node_count < 2) return net;

    const auto& pts = nodes.points;
    const CellGrid grid(pts, r0);
    grid.for_pairs_in_range(pts, [&](std::uint32_t i, std::uint32_t j) {
        const VisibilityVerdict v = line_of_sight_verdict(domain, pts[i], pts[j], max_depth);
        if (v.depth_exhausted) ++net.depth_exhausted_count;
        if (!v.blocked) net.edges.push_back({i, j});
    });
    std::sort(net.edges.begin(), net.edges.end(), [](Edge lhs, Edge rhs) {
        return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.b < rhs.b;
    });
    return net;
}

ConnectivityReport analyze(const Network& net) {
    ConnectivityReport rep;
    rep.node_count = net.node_count;
    if (net.node_count == 0) {
        return rep;  // vacuously connected, zero components
    }
    DisjointSet ds(net.node_count);
    std::vector<std::uint8_t> touched(net.node_count, 0);
    for (const Edge& e : net.edges) {
        ds.unite(e.a, e.b);
        touched[e.a] = touched[e.b] = 1;
    }
    std::size_t comps = 0, isolated = 0;
    for (std::uint32_t i = 0; i < net.node_count; ++i) {
        if (ds.find(i) == i) ++comps;
        if (!touched[i]) ++isolated;
    }
    rep.component_count = comps;
    rep.isolated_count = isolated;
    rep.fully_connected = comps <= 1;
    return rep;
}

ConnectivityReport connectivity_report(const FractalDomain& domain, const NodeSet& nodes,
                                       double r0, int max_depth,
                                       std::size_t* exhausted_tests) {
    if (!(r0 > 0.0)) throw DomainError("connection range r0 must be positive");
    ConnectivityReport rep;
    rep.node_count = nodes.points.size();
    if (exhausted_tests) *exhausted_tests = 0;
    if (rep.node_count == 0) return rep;
    if (rep.node_count == 1) {
        rep.component_count = 1;
        rep.isolated_count = 1;
        return rep;
    }

    const auto& pts = nodes.points;
    DisjointSet ds(rep.node_count);
    const CellGrid grid(pts, r0);
    std::size_t exhausted = 0;
    grid.for_pairs_in_range(pts, [&](std::uint32_t i, std::uint32_t j) {
        if (ds.find(i) == ds.find(j)) return;  // edge could not change the partition
        const VisibilityVerdict v = line_of_sight_verdict(domain, pts[i], pts[j], max_depth);
        if (v.depth_exhausted) ++exhausted;
        if (!v.blocked) ds.unite(i, j);
    });

    std::size_t comps = 0, isolated = 0;
    for (std::uint32_t i = 0; i < rep.node_count; ++i) {
        const std::uint32_t root = ds.find(i);
        if (root == i) ++comps;
        if (ds.size[root] == 1) ++isolated;
    }
    rep.component_count = comps;
    rep.isolated_count = isolated;
    rep.fully_connected = comps <= 1;
    if (exhausted_tests) *exhausted_tests = exhausted;
    return rep;
}

double expected_isolated(const FractalDomain& domain, double rho, double r0) {
    if (!(rho >= 0.0)) throw DomainError("rho must be non-negative");
    if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
    return rho * domain.V * std::exp(-rho * M_PI * r0 * r0);
}

}  // namespace kochnet
