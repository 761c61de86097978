#pragma once

#include <cmath>

#include "kochnet/membership.hpp"

// Reference scalar cores shared by the scalar batch kernel and the SIMD tails.
// The SIMD kernels replicate these operations exactly (same expressions, no FP
// contraction), so verdicts are bit-identical across kernels.

namespace kochnet::detail {

inline bool classify_one(const MembershipParams& P, double x, double y, int max_depth) {
    for (int k = 0; k < 3; ++k) {
        if (std::fabs(x) <= y) break;
        const double nx = -y;  // one quarter turn
        y = x;
        x = nx;
    }
    bool parity = false;
    for (int d = 0; d < max_depth; ++d) {
        if (y < 1.0) return !parity;
        if (y > P.y_max) return parity;
        if (std::fabs(x) > 1.0) return parity;
        const double dx = x - P.ox;
        const double dy = y - P.oy;
        int i;
        if (P.ray_ux[0] * dy - P.ray_uy[0] * dx >= 0.0) {
            i = 0;
        } else if (P.n == 2) {
            i = 1;
        } else {
            i = (P.ray_ux[1] * dy - P.ray_uy[1] * dx >= 0.0) ? 1 : 2;
        }
        const double mx = x - P.tx[i];
        const double my = y - P.ty[i];
        x = P.inv_a[i] * mx + P.inv_b[i] * my;
        y = P.inv_a[i] * my - P.inv_b[i] * mx;
        parity = parity != (P.flip[i] != 0);
    }
    return (y < 1.0) ? !parity : parity;
}

inline bool within_distance(double px, double py, double qx, double qy, double r) {
    const double dx = qx - px;
    const double dy = qy - py;
    return dx * dx + dy * dy <= r * r;
}

}  // namespace kochnet::detail
