#pragma once

#include <cstddef>
#include <cstdint>

#include "kochnet/domain.hpp"

namespace kochnet {

/// Flattened, trivially-copyable view of a FractalDomain for the batch
/// classification kernels.
struct MembershipParams {
    int n = 2;
    double y_max = 0.0;
    double ox = 0.0, oy = 0.0;        // construction-circle centre
    double ray_ux[2] = {0, 0};        // internal sector rays P_i - O, i = 1..n-1
    double ray_uy[2] = {0, 0};
    double inv_a[3] = {0, 0, 0};      // inverse-map linear coefficients
    double inv_b[3] = {0, 0, 0};
    double tx[3] = {0, 0, 0};         // map translations
    double ty[3] = {0, 0, 0};
    std::uint8_t flip[3] = {0, 0, 0};
};

MembershipParams membership_params(const FractalDomain& domain);

/// Classifies count points; inside_out[i] = 1 when point i is Inside.
using ClassifyFn = void (*)(const MembershipParams&, const double* xs, const double* ys,
                            std::size_t count, int max_depth, std::uint8_t* inside_out);

void classify_batch_scalar(const MembershipParams& params, const double* xs, const double* ys,
                           std::size_t count, int max_depth, std::uint8_t* inside_out);

#if defined(__x86_64__) || defined(_M_X64)
void classify_batch_avx2(const MembershipParams& params, const double* xs, const double* ys,
                         std::size_t count, int max_depth, std::uint8_t* inside_out);
#endif

/// Best kernel supported by the running CPU. The scalar and SIMD kernels
/// perform identical arithmetic (no FP contraction) and give bit-identical
/// verdicts; selection never changes results.
ClassifyFn select_classify_fn();

/// Name of the kernel select_classify_fn() returns ("scalar" or "avx2").
const char* selected_classify_kernel();

/// Batched neighbour filter: keep[i] = 1 when (xs[i],ys[i]) lies within
/// distance r of (px,py).
using DistanceMaskFn = void (*)(double px, double py, const double* xs, const double* ys,
                                std::size_t count, double r, std::uint8_t* keep);

void distance_mask_scalar(double px, double py, const double* xs, const double* ys,
                          std::size_t count, double r, std::uint8_t* keep);

#if defined(__x86_64__) || defined(_M_X64)
void distance_mask_avx2(double px, double py, const double* xs, const double* ys,
                        std::size_t count, double r, std::uint8_t* keep);
#endif

DistanceMaskFn select_distance_mask_fn();

}  // namespace kochnet
