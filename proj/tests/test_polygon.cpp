#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "starkit/error.hpp"
#include "starkit/polygon.hpp"
#include "starkit/rng.hpp"

using namespace starkit;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("validate: fixtures pass") {
    CHECK(validate(fixtures::square()).empty());
    CHECK(validate(fixtures::lshape()).empty());
    CHECK(validate(fixtures::ushape()).empty());
    CHECK(validate(fixtures::htri()).empty());
}

TEST_CASE("validate: violations are reported") {
    const GeodesicPolygon bowtie{Model::Euclidean, {{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    const auto v1 = validate(bowtie);
    REQUIRE(!v1.empty());
    bool has_intersect = false;
    for (const auto& s : v1) has_intersect = has_intersect || s.find("intersect") != std::string::npos;
    CHECK(has_intersect);

    const GeodesicPolygon cw{Model::Euclidean, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    const auto v2 = validate(cw);
    REQUIRE(!v2.empty());
    CHECK(v2.front().find("counterclockwise") != std::string::npos);

    const GeodesicPolygon collinear{Model::Euclidean, {{0, 0}, {1, 0}, {2, 0}, {1, 1}}};
    CHECK(!validate(collinear).empty());

    const GeodesicPolygon outside{Model::HyperbolicKlein, {{0, 0}, {1.0, 0}, {0, 0.5}}};
    CHECK(!validate(outside).empty());
}

TEST_CASE("contains: lshape classifications") {
    const auto l = fixtures::lshape();
    CHECK(contains(l, Vec2{0.5, 0.5}) == ContainmentClass::Interior);
    CHECK(contains(l, Vec2{1.5, 1.5}) == ContainmentClass::Exterior);
    CHECK(contains(l, Vec2{1.0, 1.0}) == ContainmentClass::Boundary);
    CHECK(contains(l, Vec2{1.5, 0.5}) == ContainmentClass::Interior);
    CHECK(contains(l, Vec2{2.5, 0.5}) == ContainmentClass::Exterior);
    CHECK(contains(l, Vec2{1.0, 1.5}) == ContainmentClass::Boundary);
}

TEST_CASE("contains: every vertex is boundary") {
    for (const auto& p : {fixtures::square(), fixtures::lshape(), fixtures::ushape(),
                          fixtures::htri()}) {
        for (const Vec2& v : p.vertices) {
            CHECK(contains(p, v) == ContainmentClass::Boundary);
        }
    }
}

TEST_CASE("contains: parity oracle on random scan points") {
    // Independent crossing-count check against a second implementation that
    // walks a different ray direction (-u).
    const auto l = fixtures::lshape();
    Rng rng(99);
    for (int k = 0; k < 2000; ++k) {
        const Vec2 q{rng.uniform(-0.5, 2.5), rng.uniform(-0.5, 2.5)};
        const auto cls = contains(l, q);
        if (cls == ContainmentClass::Boundary) continue;
        bool inside = false;
        for (int i = 0; i < l.size(); ++i) {
            const Vec2 a = l.vertex(i), b = l.vertex(i + 1);
            if ((a.v > q.v) != (b.v > q.v)) {
                const double xc = a.u + (q.v - a.v) / (b.v - a.v) * (b.u - a.u);
                if (xc < q.u) inside = !inside;  // opposite ray
            }
        }
        CHECK((cls == ContainmentClass::Interior) == inside);
    }
}

TEST_CASE("interior_angle: square, reflex corner, hyperbolic triangle") {
    const auto sq = fixtures::square();
    for (int i = 0; i < 4; ++i) {
        CHECK(interior_angle(sq, i) == doctest::Approx(kPi / 2).epsilon(1e-12));
    }
    const auto l = fixtures::lshape();
    CHECK(interior_angle(l, 3) == doctest::Approx(1.5 * kPi).epsilon(1e-12));
    CHECK_THROWS_AS(interior_angle(l, 6), RangeError);

    const auto tri = fixtures::htri();
    double sum = 0;
    for (int i = 0; i < 3; ++i) {
        const double a = interior_angle(tri, i);
        CHECK(a > 0);
        CHECK(a < kPi);
        sum += a;
    }
    CHECK(sum < kPi);
    CHECK(metric_area(tri) == doctest::Approx(kPi - sum).epsilon(1e-12));
}

TEST_CASE("turning angles: euclidean closes to 2pi, hyperbolic exceeds by area") {
    for (const auto& p : {fixtures::square(), fixtures::lshape(), fixtures::ushape()}) {
        double turning = 0.0;
        for (int i = 0; i < p.size(); ++i) turning += kPi - interior_angle(p, i);
        CHECK(turning == doctest::Approx(2 * kPi).epsilon(1e-6));
    }
    const auto tri = fixtures::htri();
    double turning = 0.0;
    for (int i = 0; i < tri.size(); ++i) turning += kPi - interior_angle(tri, i);
    CHECK(turning - 2 * kPi == doctest::Approx(metric_area(tri)).epsilon(1e-6));
    CHECK(metric_area(tri) > 0);
}

TEST_CASE("chart area, bbox, convexity") {
    CHECK(chart_area(fixtures::square()) == doctest::Approx(1.0));
    CHECK(chart_area(fixtures::lshape()) == doctest::Approx(3.0));
    const Bbox b = chart_bbox(fixtures::lshape());
    CHECK(b.lo.u == 0.0);
    CHECK(b.hi.u == 2.0);
    CHECK(b.hi.v == 2.0);
    CHECK(is_chart_convex(fixtures::square()));
    CHECK(is_chart_convex(fixtures::htri()));
    CHECK(!is_chart_convex(fixtures::lshape()));
    CHECK(!is_chart_convex(fixtures::ushape()));
}
