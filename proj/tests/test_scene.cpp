#include <doctest.h>

#include "fixtures.hpp"
#include "starkit/error.hpp"
#include "starkit/scene.hpp"
#include "starkit/star.hpp"
#include "starkit/svg.hpp"

using namespace starkit;

TEST_CASE("load_scene: lshape document") {
    const Scene s = load_scene(
        "model: euclidean\n"
        "polygon: [[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]]\n"
        "probes: {a: [1.8,0.5], b: [0.5,1.8]}\n"
        "seed: 42\n");
    CHECK(s.model == Model::Euclidean);
    CHECK(s.vertices.size() == 6);
    CHECK(s.probes.size() == 2);
    CHECK(s.probes[0].first == "a");
    CHECK(s.probes[1].second.v == 1.8);
    CHECK(s.seed == 42);
}

TEST_CASE("save/load: lossless round trip") {
    Scene s;
    s.model = Model::HyperbolicKlein;
    s.vertices = fixtures::htri().vertices;
    s.vertices[0].u = 0.6000000000000012345;  // not representable exactly; must survive
    s.probes = {{"outside", {0.95, 0.0}}};
    s.seed = -7;

    const std::string text = save_scene(s);
    const Scene back = load_scene(text);
    REQUIRE(back.vertices.size() == s.vertices.size());
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        CHECK(back.vertices[i].u == s.vertices[i].u);
        CHECK(back.vertices[i].v == s.vertices[i].v);
    }
    CHECK(back.probes == s.probes);
    CHECK(back.seed == s.seed);
    CHECK(save_scene(back) == text);
}

TEST_CASE("load_scene: position-annotated parse errors") {
    try {
        load_scene("model: euclidean\npolygon: [[0,0],[1 0]]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() > 10);
    }
    CHECK_THROWS_AS(load_scene("polygon: [[0,0],[1,0],[0,1]]\n"), ParseError);
    CHECK_THROWS_AS(load_scene("model: flatland\npolygon: [[0,0],[1,0],[0,1]]\n"), ParseError);
    CHECK_THROWS_AS(load_scene("model: euclidean\npolygon: [[0,0],[1,0],[0,1]] junk\n"),
                    ParseError);
    CHECK_THROWS_AS(load_scene("model: euclidean\n"), ParseError);
}

TEST_CASE("load_scene: domain and validation errors") {
    CHECK_THROWS_AS(
        load_scene("model: hyperbolic-klein\npolygon: [[0,0],[1.2,0],[0,0.5]]\n"),
        DomainError);
    CHECK_THROWS_AS(load_scene("model: euclidean\npolygon: [[0,0],[1,1],[1,0],[0,1]]\n"),
                    ValidationError);
}

TEST_CASE("random_starshaped: deterministic, valid, center in kernel") {
    for (Model m : {Model::Euclidean, Model::HyperbolicKlein}) {
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            const auto a = random_starshaped(m, 5 + static_cast<int>(seed % 12), seed);
            CHECK(validate(a).empty());
            const auto b = random_starshaped(m, 5 + static_cast<int>(seed % 12), seed);
            CHECK(a.vertices.size() == b.vertices.size());
            for (std::size_t i = 0; i < a.vertices.size(); ++i) {
                CHECK(a.vertices[i].u == b.vertices[i].u);
            }
            // Constructively starshaped about the construction center,
            // so the kernel exists and the generator is sound.
            const Region ker = kernel_halfplane(a);
            CHECK(!ker.empty());
            if (m == Model::HyperbolicKlein) {
                for (const Vec2& v : a.vertices) CHECK(norm(v) <= 0.85 + 1e-12);
            }
        }
    }
}

TEST_CASE("random_simple: deterministic, valid, mixed star-shapedness") {
    int star = 0, nonstar = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto a = random_simple(Model::Euclidean, 8, seed);
        CHECK(validate(a).empty());
        (is_starshaped(a).starshaped ? star : nonstar)++;
    }
    CHECK(star > 0);
    CHECK(nonstar > 0);

    const auto a = random_simple(Model::HyperbolicKlein, 10, 77);
    const auto b = random_simple(Model::HyperbolicKlein, 10, 77);
    CHECK(validate(a).empty());
    CHECK(a.vertices == b.vertices);
}

TEST_CASE("render_svg: structure and determinism") {
    Scene scene;
    scene.model = Model::Euclidean;
    scene.vertices = fixtures::lshape().vertices;
    scene.probes = {{"p", {1.8, 0.5}}};

    Overlays ov;
    ov.kernel = kernel_halfplane(scene.polygon());
    RenderSpec spec;
    spec.layers = {Layer::Polygon, Layer::Kernel, Layer::Probes};

    const std::string svg = render_svg(scene, ov, spec);
    CHECK(svg.find("id=\"polygon\"") != std::string::npos);
    CHECK(svg.find("id=\"kernel\"") != std::string::npos);
    CHECK(svg.find("id=\"probes\"") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(render_svg(scene, ov, spec) == svg);  // byte-identical

    // Empty kernel layer is marked, not drawn.
    Scene u;
    u.model = Model::Euclidean;
    u.vertices = fixtures::ushape().vertices;
    Overlays uo;
    uo.kernel = kernel_halfplane(u.polygon());
    const std::string usvg = render_svg(u, uo, spec);
    CHECK(usvg.find("id=\"kernel\"") == std::string::npos);
    CHECK(usvg.find("kernel: empty") != std::string::npos);

    // Hyperbolic scenes draw the disk boundary.
    Scene h;
    h.model = Model::HyperbolicKlein;
    h.vertices = fixtures::htri().vertices;
    const std::string hsvg = render_svg(h, Overlays{}, RenderSpec{});
    CHECK(hsvg.find("id=\"disk\"") != std::string::npos);
}
