#include <cstring>
#include <random>
#include <vector>

#include <doctest.h>

#include "kochnet/membership.hpp"
#include "test_util.hpp"

using namespace kochnet;

namespace {

std::vector<FractalSpec> kernel_specs() {
    std::vector<FractalSpec> specs(testing::kReferenceSpecs.begin(),
                                   testing::kReferenceSpecs.end());
    specs.push_back({2, 1e-5});
    specs.push_back({2, M_PI / 4 - 1e-6});
    specs.push_back({3, M_PI / 6 - 1e-6});
    return specs;
}

}  // namespace

TEST_CASE("selected kernel is available and consistent") {
    CHECK(select_classify_fn() != nullptr);
    CHECK(select_distance_mask_fn() != nullptr);
    const std::string name = selected_classify_kernel();
    CHECK((name == "scalar" || name == "avx2"));
    MESSAGE("membership kernel: ", name);
}

TEST_CASE("SIMD membership kernel matches the scalar reference bit for bit") {
    std::mt19937_64 g(51);
    const ClassifyFn best = select_classify_fn();
    for (const FractalSpec& spec : kernel_specs()) {
        const FractalDomain dom = derive_domain(spec);
        const MembershipParams params = membership_params(dom);
        for (const int depth : {1, 3, 12, 64}) {
            // odd count exercises the SIMD tail path
            const std::size_t count = 4001;
            std::vector<double> xs(count), ys(count);
            for (std::size_t i = 0; i < count; ++i) {
                const Point2 p = testing::random_point(g, 2.0 * dom.bounding_half());
                xs[i] = p.x;
                ys[i] = p.y;
            }
            std::vector<std::uint8_t> ref(count, 0xCC), simd(count, 0x33);
            classify_batch_scalar(params, xs.data(), ys.data(), count, depth, ref.data());
            best(params, xs.data(), ys.data(), count, depth, simd.data());
            CHECK(std::memcmp(ref.data(), simd.data(), count) == 0);
        }
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (std::string(selected_classify_kernel()) != "avx2") {
        MESSAGE("AVX2 unavailable on this host; dispatch equivalence covered scalar-vs-scalar");
    }
#endif
}

TEST_CASE("contains agrees with the batch kernels") {
    std::mt19937_64 g(52);
    const FractalDomain dom = derive_domain({3, 0.5});
    const MembershipParams params = membership_params(dom);
    const std::size_t count = 512;
    std::vector<double> xs(count), ys(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Point2 p = testing::random_point(g, dom.bounding_half());
        xs[i] = p.x;
        ys[i] = p.y;
    }
    std::vector<std::uint8_t> batch(count);
    select_classify_fn()(params, xs.data(), ys.data(), count, 48, batch.data());
    for (std::size_t i = 0; i < count; ++i) {
        const Membership m = contains(dom, {xs[i], ys[i]}, 48);
        CHECK((m == Membership::Inside) == (batch[i] != 0));
    }
}

TEST_CASE("distance mask kernels agree, including boundary ties") {
    std::mt19937_64 g(53);
    const std::size_t count = 1027;
    std::vector<double> xs(count), ys(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Point2 p = testing::random_point(g, 3.0);
        xs[i] = p.x;
        ys[i] = p.y;
    }
    // exact-tie entries: distance exactly r
    xs[0] = 1.75;
    ys[0] = 0.5;
    xs[1] = 0.5 + 1.25;
    ys[1] = 0.5;
    std::vector<std::uint8_t> ref(count, 0xAA), simd(count, 0x55);
    distance_mask_scalar(0.5, 0.5, xs.data(), ys.data(), count, 1.25, ref.data());
    select_distance_mask_fn()(0.5, 0.5, xs.data(), ys.data(), count, 1.25, simd.data());
    CHECK(std::memcmp(ref.data(), simd.data(), count) == 0);
    CHECK(ref[0] == 1);
    CHECK(ref[1] == 1);
}
