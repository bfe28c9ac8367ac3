#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "starkit/region.hpp"
#include "starkit/rng.hpp"
#include "starkit/scene.hpp"
#include "test_helpers.hpp"

using namespace starkit;
using namespace starkit::testing;

TEST_CASE("clip_halfplane: square cases") {
    const auto sq = fixtures::square();
    const Region half = clip_halfplane(sq, halfplane_u_le(Model::Euclidean, 0.5));
    check_region_close(half, {Model::Euclidean, {{0, 0}, {0.5, 0}, {0.5, 1}, {0, 1}}}, 1e-9);

    CHECK(clip_halfplane(sq, halfplane_u_le(Model::Euclidean, -1.0)).empty());

    // Clip plane through the interior of an edge band: the whole square stays.
    const Region all = clip_halfplane(sq, halfplane_u_le(Model::Euclidean, 2.0));
    check_region_close(all, sq, 1e-9);
}

TEST_CASE("clip_halfplane: lshape left column") {
    const Region col = clip_halfplane(fixtures::lshape(), halfplane_u_le(Model::Euclidean, 1.0));
    check_region_close(col, {Model::Euclidean, {{0, 0}, {1, 0}, {1, 2}, {0, 2}}}, 1e-9);
    CHECK(!col.multi_component);
}

TEST_CASE("clip_halfplane: boundary collinear with the clip line") {
    // Clip exactly along the lshape notch line v = 1.
    const Region base = clip_halfplane(fixtures::lshape(), halfplane_v_le(Model::Euclidean, 1.0));
    check_region_close(base, {Model::Euclidean, {{0, 0}, {2, 0}, {2, 1}, {0, 1}}}, 1e-9);
}

TEST_CASE("clip_halfplane: disconnected intersection is flagged, largest kept") {
    // The U cut above the slot bottom leaves the two prongs.
    const Region prongs =
        clip_halfplane(fixtures::ushape(), halfplane_v_ge(Model::Euclidean, 1.25));
    REQUIRE(!prongs.empty());
    CHECK(prongs.multi_component);
    CHECK(chart_area(*prongs.polygon) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("clip result vertices lie in the polygon and the half-plane") {
    const auto l = fixtures::lshape();
    Rng rng(5);
    for (int k = 0; k < 40; ++k) {
        const double c = rng.uniform(-0.2, 2.2);
        const Region r = clip_halfplane(l, halfplane_u_le(Model::Euclidean, c));
        if (r.empty()) continue;
        for (const Vec2& v : r.polygon->vertices) {
            CHECK(contains(l, v, 1e-7) != ContainmentClass::Exterior);
            CHECK(v.u <= c + 1e-7);
        }
    }
}

TEST_CASE("intersect_regions: idempotent and shifted squares") {
    const auto sq = fixtures::square();
    const Region self = intersect_regions(Region::of(sq), Region::of(sq));
    check_region_close(self, sq, 1e-9);

    const GeodesicPolygon shifted{Model::Euclidean,
                                  {{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}}};
    const Region overlap = intersect_regions(Region::of(sq), Region::of(shifted));
    check_region_close(overlap, {Model::Euclidean, {{0.5, 0.5}, {1, 0.5}, {1, 1}, {0.5, 1}}},
                       1e-9);
}

TEST_CASE("intersect_regions: non-convex pair pinched at a point") {
    // lshape against its reflection through u+v=2: the intersection is two
    // unit squares touching at (1,1), traced over many shared boundary runs.
    // Largest component kept, disconnection flagged.
    const auto l = fixtures::lshape();
    GeodesicPolygon mirrored = l;
    for (Vec2& v : mirrored.vertices) v = Vec2{2.0 - v.v, 2.0 - v.u};
    std::reverse(mirrored.vertices.begin(), mirrored.vertices.end());
    REQUIRE(validate(mirrored).empty());

    const Region r = intersect_regions(Region::of(l), Region::of(mirrored));
    REQUIRE(!r.empty());
    CHECK(r.multi_component);
    CHECK(chart_area(*r.polygon) == doctest::Approx(1.0).epsilon(1e-9));
    const GeodesicPolygon sq_right{Model::Euclidean, {{1, 0}, {2, 0}, {2, 1}, {1, 1}}};
    const GeodesicPolygon sq_top{Model::Euclidean, {{0, 1}, {1, 1}, {1, 2}, {0, 2}}};
    const double d = std::min(hausdorff(r, Region::of(sq_right)),
                              hausdorff(r, Region::of(sq_top)));
    CHECK(d <= 1e-9);
}

TEST_CASE("intersect_regions: empty and commutative") {
    const auto sq = fixtures::square();
    const GeodesicPolygon far{Model::Euclidean, {{5, 5}, {6, 5}, {6, 6}, {5, 6}}};
    CHECK(intersect_regions(Region::of(sq), Region::of(far)).empty());
    CHECK(intersect_regions(Region::empty_region(), Region::of(sq)).empty());

    Rng rng(17);
    for (int k = 0; k < 25; ++k) {
        const auto a = random_starshaped(Model::Euclidean, 5 + (k % 7), rng.next_u64());
        const auto b = random_starshaped(Model::Euclidean, 5 + (k % 5), rng.next_u64());
        const Region ab = intersect_regions(Region::of(a), Region::of(b));
        const Region ba = intersect_regions(Region::of(b), Region::of(a));
        CHECK(ab.empty() == ba.empty());
        if (!ab.empty() && !ba.empty()) {
            CHECK(hausdorff(ab, ba) <= 1e-9);
        }
    }
}

TEST_CASE("hausdorff: identities, translation, empties") {
    const auto sq = fixtures::square();
    CHECK(hausdorff(Region::of(sq), Region::of(sq)) <= 1e-12);

    GeodesicPolygon moved = sq;
    for (Vec2& v : moved.vertices) v.u += 0.1;
    CHECK(hausdorff(Region::of(sq), Region::of(moved)) == doctest::Approx(0.1).epsilon(1e-6));

    CHECK(hausdorff(Region::empty_region(), Region::empty_region()) == 0.0);
    CHECK(std::isinf(hausdorff(Region::of(sq), Region::empty_region())));
}

TEST_CASE("hausdorff: klein uses the metric, not the chart") {
    // Two concentric chords near the rim: chart offset 0.04, but the metric
    // separation is larger because the disk compresses chart lengths.
    const GeodesicPolygon inner{Model::HyperbolicKlein,
                                {{0.80, -0.3}, {0.84, -0.3}, {0.84, 0.3}, {0.80, 0.3}}};
    const GeodesicPolygon outer{Model::HyperbolicKlein,
                                {{0.80, -0.3}, {0.88, -0.3}, {0.88, 0.3}, {0.80, 0.3}}};
    const double d = hausdorff(Region::of(inner), Region::of(outer));
    const double chart_gap = 0.04;
    CHECK(d > chart_gap);  // hyperbolic stretch near the rim
}
