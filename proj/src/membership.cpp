#include "kochnet/membership.hpp"

#include "kernel_core.hpp"

namespace kochnet {

MembershipParams membership_params(const FractalDomain& domain) {
    MembershipParams p;
    p.n = domain.family();
    p.y_max = domain.y_max;
    p.ox = domain.circle_center.x;
    p.oy = domain.circle_center.y;
    for (int i = 1; i < p.n; ++i) {
        const Point2 u = domain.base_points[i] - domain.circle_center;
        p.ray_ux[i - 1] = u.x;
        p.ray_uy[i - 1] = u.y;
    }
    for (int i = 0; i < p.n; ++i) {
        const SimilarityMap& m = domain.maps[i];
        p.inv_a[i] = m.inv_a();
        p.inv_b[i] = m.inv_b();
        p.tx[i] = m.translation().x;
        p.ty[i] = m.translation().y;
        p.flip[i] = m.side_flip() ? 1 : 0;
    }
    return p;
}

void classify_batch_scalar(const MembershipParams& params, const double* xs, const double* ys,
                           std::size_t count, int max_depth, std::uint8_t* inside_out) {
    for (std::size_t i = 0; i < count; ++i) {
        inside_out[i] = detail::classify_one(params, xs[i], ys[i], max_depth) ? 1 : 0;
    }
}

void distance_mask_scalar(double px, double py, const double* xs, const double* ys,
                          std::size_t count, double r, std::uint8_t* keep) {
    for (std::size_t i = 0; i < count; ++i) {
        keep[i] = detail::within_distance(px, py, xs[i], ys[i], r) ? 1 : 0;
    }
}

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace

ClassifyFn select_classify_fn() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return &classify_batch_avx2;
#endif
    return &classify_batch_scalar;
}

const char* selected_classify_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return "avx2";
#endif
    return "scalar";
}

DistanceMaskFn select_distance_mask_fn() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return &distance_mask_avx2;
#endif
    return &distance_mask_scalar;
}

}  // namespace kochnet
