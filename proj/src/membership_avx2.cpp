// AVX2 variants of the batch kernels. Lane arithmetic mirrors the scalar core
// operation for operation (mul/add/sub only, no FMA), so results are
// bit-identical to classify_batch_scalar / distance_mask_scalar.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernel_core.hpp"

namespace kochnet {

namespace {

inline __m256d abs_pd(__m256d v) {
    return _mm256_and_pd(v, _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL)));
}

// mask ? b : a
inline __m256d select_pd(__m256d mask, __m256d b, __m256d a) {
    return _mm256_blendv_pd(a, b, mask);
}

}  // namespace

void classify_batch_avx2(const MembershipParams& P, const double* xs, const double* ys,
                         std::size_t count, int max_depth, std::uint8_t* inside_out) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d ymax = _mm256_set1_pd(P.y_max);
    const __m256d ox = _mm256_set1_pd(P.ox);
    const __m256d oy = _mm256_set1_pd(P.oy);
    const __m256d r0x = _mm256_set1_pd(P.ray_ux[0]);
    const __m256d r0y = _mm256_set1_pd(P.ray_uy[0]);
    const __m256d r1x = _mm256_set1_pd(P.ray_ux[1]);
    const __m256d r1y = _mm256_set1_pd(P.ray_uy[1]);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d all = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    const bool tri = (P.n == 3);

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d x = _mm256_loadu_pd(xs + i);
        __m256d y = _mm256_loadu_pd(ys + i);

        const __m256d signbit = _mm256_set1_pd(-0.0);
        for (int k = 0; k < 3; ++k) {
            const __m256d ok = _mm256_cmp_pd(abs_pd(x), y, _CMP_LE_OQ);
            if (_mm256_movemask_pd(ok) == 0xF) break;
            const __m256d nx = _mm256_xor_pd(y, signbit);  // exact -y
            const __m256d ny = x;
            x = select_pd(ok, x, nx);
            y = select_pd(ok, y, ny);
        }

        __m256d parity = _mm256_setzero_pd();
        __m256d active = all;
        __m256d inside = _mm256_setzero_pd();

        for (int d = 0; d < max_depth; ++d) {
            const __m256d below = _mm256_and_pd(active, _mm256_cmp_pd(y, one, _CMP_LT_OQ));
            const __m256d outband =
                _mm256_or_pd(_mm256_cmp_pd(y, ymax, _CMP_GT_OQ),
                             _mm256_cmp_pd(abs_pd(x), one, _CMP_GT_OQ));
            const __m256d above = _mm256_and_pd(_mm256_andnot_pd(below, active), outband);
            inside = _mm256_or_pd(inside, _mm256_andnot_pd(parity, below));
            inside = _mm256_or_pd(inside, _mm256_and_pd(parity, above));
            active = _mm256_andnot_pd(_mm256_or_pd(below, above), active);
            if (_mm256_movemask_pd(active) == 0) break;

            const __m256d dx = _mm256_sub_pd(x, ox);
            const __m256d dy = _mm256_sub_pd(y, oy);
            const __m256d c0 =
                _mm256_sub_pd(_mm256_mul_pd(r0x, dy), _mm256_mul_pd(r0y, dx));
            const __m256d s0 = _mm256_cmp_pd(c0, zero, _CMP_GE_OQ);

            __m256d ia, ib, tx, ty, flipsel;
            if (!tri) {
                ia = select_pd(s0, _mm256_set1_pd(P.inv_a[0]), _mm256_set1_pd(P.inv_a[1]));
                ib = select_pd(s0, _mm256_set1_pd(P.inv_b[0]), _mm256_set1_pd(P.inv_b[1]));
                tx = select_pd(s0, _mm256_set1_pd(P.tx[0]), _mm256_set1_pd(P.tx[1]));
                ty = select_pd(s0, _mm256_set1_pd(P.ty[0]), _mm256_set1_pd(P.ty[1]));
                flipsel = active;  // both F2 maps flip
            } else {
                const __m256d c1 =
                    _mm256_sub_pd(_mm256_mul_pd(r1x, dy), _mm256_mul_pd(r1y, dx));
                const __m256d s1 = _mm256_andnot_pd(s0, _mm256_cmp_pd(c1, zero, _CMP_GE_OQ));
                const __m256d lo = select_pd(s1, _mm256_set1_pd(P.inv_a[1]),
                                             _mm256_set1_pd(P.inv_a[2]));
                ia = select_pd(s0, _mm256_set1_pd(P.inv_a[0]), lo);
                const __m256d lob = select_pd(s1, _mm256_set1_pd(P.inv_b[1]),
                                              _mm256_set1_pd(P.inv_b[2]));
                ib = select_pd(s0, _mm256_set1_pd(P.inv_b[0]), lob);
                const __m256d lot = select_pd(s1, _mm256_set1_pd(P.tx[1]),
                                              _mm256_set1_pd(P.tx[2]));
                tx = select_pd(s0, _mm256_set1_pd(P.tx[0]), lot);
                const __m256d loty = select_pd(s1, _mm256_set1_pd(P.ty[1]),
                                               _mm256_set1_pd(P.ty[2]));
                ty = select_pd(s0, _mm256_set1_pd(P.ty[0]), loty);
                flipsel = _mm256_andnot_pd(s1, active);  // S_32 (index 1) keeps orientation
            }

            const __m256d mx = _mm256_sub_pd(x, tx);
            const __m256d my = _mm256_sub_pd(y, ty);
            const __m256d nx = _mm256_add_pd(_mm256_mul_pd(ia, mx), _mm256_mul_pd(ib, my));
            const __m256d ny = _mm256_sub_pd(_mm256_mul_pd(ia, my), _mm256_mul_pd(ib, mx));
            x = select_pd(active, nx, x);
            y = select_pd(active, ny, y);
            parity = _mm256_xor_pd(parity, flipsel);
        }

        if (_mm256_movemask_pd(active) != 0) {
            const __m256d below = _mm256_and_pd(active, _mm256_cmp_pd(y, one, _CMP_LT_OQ));
            inside = _mm256_or_pd(inside, _mm256_andnot_pd(parity, below));
            inside = _mm256_or_pd(inside,
                                  _mm256_and_pd(parity, _mm256_andnot_pd(below, active)));
        }

        const int bits = _mm256_movemask_pd(inside);
        inside_out[i + 0] = (bits >> 0) & 1;
        inside_out[i + 1] = (bits >> 1) & 1;
        inside_out[i + 2] = (bits >> 2) & 1;
        inside_out[i + 3] = (bits >> 3) & 1;
    }
    for (; i < count; ++i) {
        inside_out[i] = detail::classify_one(P, xs[i], ys[i], max_depth) ? 1 : 0;
    }
}

void distance_mask_avx2(double px, double py, const double* xs, const double* ys,
                        std::size_t count, double r, std::uint8_t* keep) {
    const __m256d pxv = _mm256_set1_pd(px);
    const __m256d pyv = _mm256_set1_pd(py);
    const __m256d r2 = _mm256_set1_pd(r * r);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), pxv);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), pyv);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const int bits = _mm256_movemask_pd(_mm256_cmp_pd(d2, r2, _CMP_LE_OQ));
        keep[i + 0] = (bits >> 0) & 1;
        keep[i + 1] = (bits >> 1) & 1;
        keep[i + 2] = (bits >> 2) & 1;
        keep[i + 3] = (bits >> 3) & 1;
    }
    for (; i < count; ++i) {
        keep[i] = detail::within_distance(px, py, xs[i], ys[i], r) ? 1 : 0;
    }
}

}  // namespace kochnet

#endif  // x86_64
