#pragma once

#include <array>
#include <random>
#include <vector>

#include "kochnet/domain.hpp"

namespace kochnet::testing {

inline const std::array<FractalSpec, 4> kReferenceSpecs = {
    FractalSpec{2, 0.4}, FractalSpec{2, 0.7}, FractalSpec{3, 0.3}, FractalSpec{3, 0.5}};

inline Point2 random_point(std::mt19937_64& g, double half) {
    const auto u = [&] { return static_cast<double>(g() >> 11) * 0x1.0p-53; };
    return {-half + 2.0 * half * u(), -half + 2.0 * half * u()};
}

inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace kochnet::testing
