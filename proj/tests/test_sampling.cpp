#include <cmath>
#include <numeric>

#include <doctest.h>

#include "kochnet/rng.hpp"
#include "kochnet/sampling.hpp"
#include "test_util.hpp"

using namespace kochnet;

TEST_CASE("zero density gives an empty realization") {
    const FractalDomain dom = derive_domain({2, 0.4});
    const NodeSet ns = sample_poisson_nodes(dom, 0.0, 1234);
    CHECK(ns.points.empty());
    CHECK(ns.rho == 0.0);
    CHECK_THROWS_AS(sample_poisson_nodes(dom, -1.0, 1), DomainError);
}

TEST_CASE("same seed reproduces the point list bit for bit") {
    const FractalDomain dom = derive_domain({3, 0.5});
    const NodeSet a = sample_poisson_nodes(dom, 20.0, 987654321);
    const NodeSet b = sample_poisson_nodes(dom, 20.0, 987654321);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }
    const NodeSet c = sample_poisson_nodes(dom, 20.0, 987654322);
    CHECK(a.points.size() != c.points.size());  // overwhelmingly likely
}

TEST_CASE("every retained point classifies Inside") {
    const FractalDomain dom = derive_domain({2, 0.7});
    std::size_t total = 0;
    for (std::uint64_t seed = 0; total < 10000; ++seed) {
        const NodeSet ns = sample_poisson_nodes(dom, 300.0, 5000 + seed);
        total += ns.points.size();
        for (const Point2& p : ns.points) {
            CHECK(contains(dom, p) == Membership::Inside);
        }
    }
}

TEST_CASE("retained counts match Poisson(rho * V) in mean and variance") {
    const FractalDomain dom = derive_domain({2, M_PI / 6});
    const double rho = 5.0;
    const double lambda = rho * dom.V;  // 26.9282...
    const int trials = 1000;
    std::vector<double> counts(trials);
    for (int t = 0; t < trials; ++t) {
        counts[t] = static_cast<double>(
            sample_poisson_nodes(dom, rho, derive_seed(0xC0FFEE, 0, t)).points.size());
    }
    const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / trials;
    CHECK(std::fabs(mean - lambda) <= 3.0 * std::sqrt(lambda / trials));

    double ss = 0.0;
    for (double c : counts) ss += (c - mean) * (c - mean);
    const double var = ss / (trials - 1);
    // Var(s^2) for Poisson ~ (lambda + 2 lambda^2)/trials
    const double var_se = std::sqrt((lambda + 2.0 * lambda * lambda) / trials);
    CHECK(std::fabs(var - lambda) <= 3.0 * var_se);
}

TEST_CASE("density is uniform on a sub-square of the interior") {
    const FractalDomain dom = derive_domain({2, 0.4});
    const double rho = 40.0;
    const int trials = 400;
    std::size_t in_box = 0;
    for (int t = 0; t < trials; ++t) {
        const NodeSet ns = sample_poisson_nodes(dom, rho, derive_seed(0xBEEF, 1, t));
        for (const Point2& p : ns.points) {
            if (std::fabs(p.x) <= 0.5 && std::fabs(p.y) <= 0.5) ++in_box;
        }
    }
    const double lambda = rho * 1.0 * trials;  // box area 1.0
    CHECK(std::fabs(static_cast<double>(in_box) - lambda) <= 3.0 * std::sqrt(lambda));
}

TEST_CASE("poisson_draw moments at small and large means") {
    for (const double mean : {0.5, 33.0, 2500.0}) {
        Rng rng(42);
        const int trials = 4000;
        double sum = 0.0, sum2 = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double v = static_cast<double>(poisson_draw(rng, mean));
            sum += v;
            sum2 += v * v;
        }
        const double m = sum / trials;
        const double var = sum2 / trials - m * m;
        CHECK(std::fabs(m - mean) <= 4.0 * std::sqrt(mean / trials));
        CHECK(std::fabs(var - mean) <=
              4.0 * std::sqrt((mean + 2.0 * mean * mean) / trials));
    }
    Rng rng(7);
    CHECK(poisson_draw(rng, 0.0) == 0);
}
