#include <cmath>
#include <random>

#include <doctest.h>

#include "kochnet/similarity.hpp"
#include "test_util.hpp"

using namespace kochnet;

TEST_CASE("similarity from pairs: quarter turn") {
    const auto m = similarity_from_pairs({0, 0}, {0, 0}, {1, 0}, {0, 1});
    CHECK(m.scale() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.rotation() == doctest::Approx(M_PI / 2).epsilon(1e-14));
    const Point2 img = m.apply({3, 4});
    CHECK(img.x == doctest::Approx(-4).epsilon(1e-13));
    CHECK(img.y == doctest::Approx(3).epsilon(1e-13));
}

TEST_CASE("similarity from pairs: identity") {
    const auto m = similarity_from_pairs({0, 0}, {0, 0}, {1, 0}, {1, 0});
    CHECK(m.scale() == doctest::Approx(1.0));
    CHECK(m.rotation() == doctest::Approx(0.0));
    const Point2 img = m.apply({-2.5, 7.0});
    CHECK(img.x == doctest::Approx(-2.5));
    CHECK(img.y == doctest::Approx(7.0));
}

TEST_CASE("similarity from pairs: degenerate inputs") {
    CHECK_THROWS_AS(similarity_from_pairs({1, 1}, {0, 0}, {1, 1}, {2, 2}), DomainError);
    CHECK_THROWS_AS(similarity_from_pairs({0, 0}, {3, 3}, {1, 0}, {3, 3}), DomainError);
}

TEST_CASE("similarity maps send defining pairs and stay reflection-free") {
    std::mt19937_64 g(11);
    for (int it = 0; it < 200; ++it) {
        const Point2 p1 = testing::random_point(g, 5.0);
        Point2 p2 = testing::random_point(g, 5.0);
        if (distance(p1, p2) < 1e-6) p2.x += 1.0;
        const Point2 q1 = testing::random_point(g, 5.0);
        Point2 q2 = testing::random_point(g, 5.0);
        if (distance(q1, q2) < 1e-6) q2.y += 1.0;
        const auto m = similarity_from_pairs(p1, q1, p2, q2);

        CHECK(distance(m.apply(p1), q1) < 1e-12 * (1.0 + norm(q1)));
        CHECK(distance(m.apply(p2), q2) < 1e-12 * (1.0 + norm(q2)));

        // columns of the linear part: orthogonal, equal norm, positive determinant
        const Point2 origin = m.apply({0, 0});
        const Point2 c1 = m.apply({1, 0}) - origin;
        const Point2 c2 = m.apply({0, 1}) - origin;
        CHECK(std::fabs(dot(c1, c2)) < 1e-12 * dot(c1, c1));
        CHECK(norm(c1) == doctest::Approx(norm(c2)).epsilon(1e-12));
        CHECK(cross(c1, c2) > 0.0);
    }
}

TEST_CASE("apply/inverse round trip stays within 1e-10") {
    std::mt19937_64 g(12);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const double scale = 0.05 + 3.0 * testing::uniform01(g);
        const double rot = -M_PI + 2 * M_PI * testing::uniform01(g);
        const SimilarityMap m(scale, rot, testing::random_point(g, 2.0), false);
        const Point2 p = testing::random_point(g, 10.0);
        worst = std::max(worst, distance(p, m.inverse_apply(m.apply(p))));
        worst = std::max(worst, distance(p, m.apply(m.inverse_apply(p))));
    }
    CHECK(worst < 1e-10);
}
