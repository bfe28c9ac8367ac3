#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starkit/polygon.hpp"

namespace starkit {

// A polygon plus optional named probe points, as persisted by the text
// format (see load_scene). Round-trips losslessly.
struct Scene {
    Model model = Model::Euclidean;
    std::vector<Vec2> vertices;
    std::vector<std::pair<std::string, Vec2>> probes;
    std::optional<long long> seed;

    GeodesicPolygon polygon() const { return GeodesicPolygon{model, vertices}; }
};

// Text format:
//   model: euclidean | hyperbolic-klein
//   polygon: [[u1,v1],[u2,v2],...]
//   probes: {name: [u,v], ...}     (optional)
//   seed: <integer>                (optional)
// Throws ParseError (position-annotated), DomainError (points outside the
// model domain) or ValidationError (invalid polygon).
Scene load_scene(const std::string& text);
std::string save_scene(const Scene& s);

Scene load_scene_file(const std::string& path);
void save_scene_file(const Scene& s, const std::string& path);

// Radial construction about a random center: sorted direction angles and
// radii, clamped inside the Klein disk. Chart-star-shaped about the center by
// construction, hence geodesically star-shaped. Deterministic per seed.
GeodesicPolygon random_starshaped(Model model, int n_vertices, std::uint64_t seed);

// Random points untangled by 2-opt edge swaps until simple; may or may not be
// starshaped. Deterministic per seed.
GeodesicPolygon random_simple(Model model, int n_vertices, std::uint64_t seed);

}  // namespace starkit
