#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "kochnet/domain.hpp"
#include "kochnet/membership.hpp"
#include "test_util.hpp"

using namespace kochnet;

namespace {

double round2(double v) { return std::round(v * 100.0) / 100.0; }

double shoelace(const std::vector<Point2>& closed) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
        s += cross(closed[i], closed[i + 1]);
    }
    return std::fabs(s) / 2.0;
}

}  // namespace

TEST_CASE("reference dimensions match to 2 decimal places") {
    CHECK(round2(derive_domain({2, 0.4}).D) == 1.13);
    CHECK(round2(derive_domain({2, 0.7}).D) == 1.63);
    CHECK(round2(derive_domain({3, 0.3}).D) == 1.13);
    CHECK(round2(derive_domain({3, 0.5}).D) == 1.50);
}

TEST_CASE("Koch angle reproduces ln4/ln3 exactly") {
    const double D = derive_domain({2, M_PI / 6}).D;
    CHECK(std::fabs(D - std::log(4.0) / std::log(3.0)) <= 1e-12);
}

TEST_CASE("F3 near the upper angle approaches ln3/ln2") {
    const double D = derive_domain({3, M_PI / 6 - 1e-6}).D;
    CHECK(std::fabs(D - std::log(3.0) / std::log(2.0)) <= 1e-3);
}

TEST_CASE("tiny angle limit: unit square with smooth boundary") {
    const FractalDomain dom = derive_domain({2, 1e-9});
    CHECK(std::fabs(dom.D - 1.0) <= 1e-6);
    CHECK(std::fabs(dom.V - 4.0) <= 1e-6);
}

TEST_CASE("enclosed area closed forms") {
    CHECK(derive_domain({2, M_PI / 6}).V ==
          doctest::Approx(4.0 + 4.0 * std::sqrt(3.0) / 5.0).epsilon(1e-14));
    CHECK(derive_domain({2, M_PI / 6}).V == doctest::Approx(5.385640646055102).epsilon(1e-12));
    CHECK(derive_domain({2, 0.4}).V == doctest::Approx(5.064047622847624).epsilon(1e-12));
    CHECK(derive_domain({3, 0.5}).V == doctest::Approx(7.891582626048505).epsilon(1e-12));
}

TEST_CASE("angle validation") {
    CHECK_THROWS_AS(derive_domain({2, 0.0}), DomainError);
    CHECK_THROWS_AS(derive_domain({2, -0.1}), DomainError);
    CHECK_THROWS_AS(derive_domain({2, M_PI / 4}), DomainError);
    CHECK_THROWS_AS(derive_domain({2, 0.9}), DomainError);
    CHECK_THROWS_AS(derive_domain({3, M_PI / 6}), DomainError);
    CHECK_THROWS_AS(derive_domain({3, 0.6}), DomainError);
    CHECK_THROWS_AS(derive_domain({4, 0.1}), DomainError);
    CHECK_NOTHROW(derive_domain({3, M_PI / 6 - 1e-6}));
    CHECK_NOTHROW(derive_domain({2, 1e-9}));
}

TEST_CASE("dimension equation residual over random specs") {
    std::mt19937_64 g(21);
    for (int it = 0; it < 1000; ++it) {
        const int n = (g() & 1) ? 2 : 3;
        const double hi = M_PI / (2.0 * n) - 2e-6;
        const double theta = hi * (1e-6 + (1.0 - 2e-6) * testing::uniform01(g));
        const FractalDomain dom = derive_domain({n, theta});
        CHECK(dom.r > 0.0);
        CHECK(dom.r < 1.0);
        CHECK(n * dom.r > 1.0);
        CHECK(std::fabs(n * std::pow(dom.r, dom.D) - 1.0) <= 1e-12);
        CHECK(std::fabs(dom.y_max - (1.0 + std::tan((n - 1) * theta))) <= 1e-12);
    }
}

TEST_CASE("dimension is increasing in theta with the family's range") {
    for (const int n : {2, 3}) {
        double prev = 1.0;
        const double hi = M_PI / (2.0 * n) - 1e-6;
        const double cap = (n == 2) ? 2.0 : std::log(3.0) / std::log(2.0);
        for (int i = 1; i <= 400; ++i) {
            const double theta = hi * i / 400.0;
            const double D = derive_domain({n, theta}).D;
            CHECK(D > prev);
            CHECK(D > 1.0);
            CHECK(D < cap + 1e-9);
            prev = D;
        }
    }
}

TEST_CASE("area bounds on the open parameter ranges") {
    for (int i = 1; i <= 200; ++i) {
        const double t2 = (M_PI / 4 - 1e-6) * i / 200.0;
        const double v2 = derive_domain({2, t2}).V;
        CHECK(v2 > 4.0);
        CHECK(v2 < 6.0);
        const double t3 = (M_PI / 6 - 1e-6) * i / 200.0;
        const double v3 = derive_domain({3, t3}).V;
        CHECK(v3 > 4.0);
        CHECK(v3 < (20.0 + 12.0 * std::sqrt(3.0)) / 5.0);
    }
}

TEST_CASE("construction circle and base points") {
    for (const FractalSpec& spec : testing::kReferenceSpecs) {
        const FractalDomain dom = derive_domain(spec);
        const int n = dom.family();
        CHECK(dom.base_points.size() == static_cast<std::size_t>(n + 1));
        CHECK(dom.base_points[0].x == -1.0);
        CHECK(dom.base_points[0].y == 1.0);
        CHECK(dom.base_points[n].x == 1.0);
        CHECK(dom.base_points[n].y == 1.0);
        for (int k = 0; k <= n; ++k) {
            CHECK(std::fabs(distance(dom.base_points[k], dom.circle_center) -
                            dom.circle_radius) <= 1e-12 * dom.circle_radius);
        }
        for (int k = 0; k < n; ++k) {
            const Point2 u = dom.base_points[k] - dom.circle_center;
            const Point2 v = dom.base_points[k + 1] - dom.circle_center;
            const double ang = std::atan2(cross(u, v), dot(u, v));
            CHECK(std::fabs(std::fabs(ang) - 2.0 * spec.theta) <= 1e-12);
        }
    }
}

TEST_CASE("maps follow the construction table") {
    for (const FractalSpec& spec : testing::kReferenceSpecs) {
        const FractalDomain dom = derive_domain(spec);
        const int n = dom.family();
        REQUIRE(dom.maps.size() == static_cast<std::size_t>(n));
        for (const SimilarityMap& m : dom.maps) {
            CHECK(std::fabs(m.scale() - dom.r) <= 1e-12);
        }
        // the first map carries the base start onto the first division point
        CHECK(distance(dom.maps[0].apply(dom.base_points[0]), dom.base_points[1]) <= 1e-12);
        if (n == 2) {
            CHECK(dom.maps[0].side_flip());
            CHECK(dom.maps[1].side_flip());
            // A->B, C->A and A->C, C->B
            CHECK(distance(dom.maps[0].apply(dom.base_points[2]), dom.base_points[0]) <= 1e-12);
            CHECK(distance(dom.maps[1].apply(dom.base_points[0]), dom.base_points[2]) <= 1e-12);
            CHECK(distance(dom.maps[1].apply(dom.base_points[2]), dom.base_points[1]) <= 1e-12);
        } else {
            CHECK(dom.maps[0].side_flip());
            CHECK_FALSE(dom.maps[1].side_flip());
            CHECK(dom.maps[2].side_flip());
            // S31: A->B, D->A; S32: A->B, D->C; S33: A->D, D->C
            CHECK(distance(dom.maps[0].apply(dom.base_points[3]), dom.base_points[0]) <= 1e-12);
            CHECK(distance(dom.maps[1].apply(dom.base_points[0]), dom.base_points[1]) <= 1e-12);
            CHECK(distance(dom.maps[1].apply(dom.base_points[3]), dom.base_points[2]) <= 1e-12);
            CHECK(distance(dom.maps[2].apply(dom.base_points[0]), dom.base_points[3]) <= 1e-12);
            CHECK(distance(dom.maps[2].apply(dom.base_points[3]), dom.base_points[2]) <= 1e-12);
        }
    }
}

TEST_CASE("fold_to_top examples and property") {
    {
        const auto [p, k] = fold_to_top({0.2, 0.5});
        CHECK(k == 0);
        CHECK(p.x == 0.2);
        CHECK(p.y == 0.5);
    }
    {
        const auto [p, k] = fold_to_top({0.5, -0.2});
        CHECK(k == 1);
        CHECK(p.x == doctest::Approx(0.2));
        CHECK(p.y == doctest::Approx(0.5));
    }
    {
        const auto [p, k] = fold_to_top({1.0, 1.0});
        CHECK(k == 0);
        CHECK(p.x == 1.0);
        CHECK(p.y == 1.0);
    }
    {
        const auto [p, k] = fold_to_top({0.0, 0.0});
        CHECK(k == 0);
        CHECK(p.x == 0.0);
    }
    std::mt19937_64 g(31);
    for (int it = 0; it < 2000; ++it) {
        const Point2 q = testing::random_point(g, 3.0);
        const auto [p, k] = fold_to_top(q);
        CHECK(std::fabs(p.x) <= p.y);
        const Point2 back = rotate_quarter(q, k);
        CHECK(back.x == p.x);
        CHECK(back.y == p.y);
    }
}

TEST_CASE("region_index examples and tie break") {
    const FractalDomain f2 = derive_domain({2, 0.4});
    CHECK(region_index(f2, {-0.5, 1.1}) == 0);
    CHECK(region_index(f2, {0.5, 1.1}) == 1);
    CHECK(region_index(f2, {0.0, 1.2}) == 0);  // on the dividing ray

    const FractalDomain f3 = derive_domain({3, 0.3});
    // the division points themselves sit exactly on their rays
    CHECK(region_index(f3, f3.base_points[1]) == 0);
    CHECK(region_index(f3, f3.base_points[2]) == 1);  // second ray, lower index wins
    CHECK(region_index(f3, {-0.5, 1.05}) == 0);
    CHECK(region_index(f3, {0.0, 1.3}) == 1);
    CHECK(region_index(f3, {0.5, 1.05}) == 2);
}

TEST_CASE("curve_polyline base cases") {
    const FractalDomain dom = derive_domain({2, 0.4});
    const auto m0 = curve_polyline(dom, 0);
    REQUIRE(m0.size() == 2);
    CHECK(m0[0].x == -1.0);
    CHECK(m0[0].y == 1.0);
    CHECK(m0[1].x == 1.0);
    CHECK(m0[1].y == 1.0);

    const auto m1 = curve_polyline(dom, 1);
    REQUIRE(m1.size() == 3);
    CHECK(m1[1].x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m1[1].y == doctest::Approx(1.0 + std::tan(0.4)).epsilon(1e-12));

    const auto f3m1 = curve_polyline(derive_domain({3, 0.5}), 1);
    REQUIRE(f3m1.size() == 4);
}

TEST_CASE("curve_polyline segment lengths scale as r^m") {
    for (const FractalSpec& spec : testing::kReferenceSpecs) {
        const FractalDomain dom = derive_domain(spec);
        const int m = 6;
        const auto pts = curve_polyline(dom, m);
        const double expect = 2.0 * std::pow(dom.r, m);
        REQUIRE(pts.size() == static_cast<std::size_t>(std::pow(dom.family(), m)) + 1);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            CHECK(distance(pts[i], pts[i + 1]) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("polyline hull: band and x-range hold for all tested levels") {
    std::vector<FractalSpec> specs(testing::kReferenceSpecs.begin(),
                                   testing::kReferenceSpecs.end());
    specs.push_back({2, M_PI / 6});
    specs.push_back({2, 0.01});
    specs.push_back({3, 0.01});
    specs.push_back({2, M_PI / 4 - 1e-6});
    specs.push_back({3, M_PI / 6 - 1e-6});
    for (const FractalSpec& spec : specs) {
        const FractalDomain dom = derive_domain(spec);
        for (int m = 0; m <= 10; m += 2) {
            if (std::pow(dom.family(), m) > 250000) break;
            const auto pts = curve_polyline(dom, m);
            for (const Point2& p : pts) {
                CHECK(p.x >= -1.0 - 1e-9);
                CHECK(p.x <= 1.0 + 1e-9);
                CHECK(p.y >= 1.0 - 1e-9);
                CHECK(p.y <= dom.y_max + 1e-9);
            }
        }
    }
}

TEST_CASE("vertex budget is enforced") {
    const FractalDomain dom = derive_domain({2, 0.4});
    CHECK_THROWS_AS(curve_polyline(dom, 24, 1000), VertexBudgetError);
    CHECK_THROWS_AS(domain_boundary_polyline(dom, 24, 1000), VertexBudgetError);
    CHECK_THROWS_AS(curve_polyline(dom, -1), DomainError);
}

TEST_CASE("boundary polyline: square at level 0, closed, 4*n^m vertices") {
    for (const FractalSpec& spec : testing::kReferenceSpecs) {
        const FractalDomain dom = derive_domain(spec);
        const auto sq = domain_boundary_polyline(dom, 0);
        REQUIRE(sq.size() == 5);
        CHECK(sq.front().x == sq.back().x);
        CHECK(sq.front().y == sq.back().y);
        CHECK(shoelace(sq) == doctest::Approx(4.0).epsilon(1e-12));

        const int m = 5;
        const auto b = domain_boundary_polyline(dom, m);
        CHECK(b.size() == 4 * static_cast<std::size_t>(std::pow(dom.family(), m)) + 1);
        CHECK(b.front().x == b.back().x);
        CHECK(b.front().y == b.back().y);
    }
}

TEST_CASE("boundary shoelace area approaches V") {
    const FractalDomain dom = derive_domain({2, 0.4});
    const double a8 = shoelace(domain_boundary_polyline(dom, 8));
    CHECK(std::fabs(a8 - dom.V) / dom.V < 0.01);
    const double a12 = shoelace(domain_boundary_polyline(dom, 12));
    CHECK(std::fabs(a12 - dom.V) < std::fabs(a8 - dom.V));

    const double f3 = shoelace(domain_boundary_polyline(derive_domain({3, 0.5}), 8));
    CHECK(std::fabs(f3 - derive_domain({3, 0.5}).V) / f3 < 0.01);
}

TEST_CASE("contains: trivial classifications") {
    for (const FractalSpec& spec : testing::kReferenceSpecs) {
        const FractalDomain dom = derive_domain(spec);
        CHECK(contains(dom, {0.0, 0.0}) == Membership::Inside);
        CHECK(contains(dom, {0.0, dom.y_max + 0.1}) == Membership::Outside);
        CHECK(contains(dom, {dom.y_max + 0.1, 0.0}) == Membership::Outside);
        CHECK(contains(dom, {0.9, 0.9}) == Membership::Inside);
    }
    const FractalDomain koch = derive_domain({2, M_PI / 6});
    CHECK(contains(koch, {0.0, 1.2}, 64) == Membership::Inside);
}

TEST_CASE("Monte Carlo membership area matches V within 3 standard errors") {
    const FractalDomain dom = derive_domain({2, M_PI / 6});
    const MembershipParams params = membership_params(dom);
    std::mt19937_64 g(41);
    const std::size_t samples = 200000;
    std::vector<double> xs(samples), ys(samples);
    const double half = dom.bounding_half();
    for (std::size_t i = 0; i < samples; ++i) {
        xs[i] = -half + 2 * half * testing::uniform01(g);
        ys[i] = -half + 2 * half * testing::uniform01(g);
    }
    std::vector<std::uint8_t> in(samples);
    select_classify_fn()(params, xs.data(), ys.data(), samples, kDefaultMaxDepth, in.data());
    std::size_t hits = 0;
    for (auto v : in) hits += v;
    const double square = 4.0 * half * half;
    const double p = static_cast<double>(hits) / samples;
    const double est = square * p;
    const double se = square * std::sqrt(p * (1 - p) / samples);
    CHECK(std::fabs(est - dom.V) <= 3.0 * se);
}
