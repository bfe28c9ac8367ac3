#pragma once

#include <string>
#include <vector>

#include "starkit/region.hpp"
#include "starkit/scene.hpp"

namespace starkit {

enum class Layer { Polygon, Kernel, StarsAtExtremes, ExtremeMarkers, GapSegments, Probes };

const char* layer_id(Layer l);
std::optional<Layer> layer_from_string(std::string_view s);

struct RenderSpec {
    std::vector<Layer> layers{Layer::Polygon};
    int canvas_px = 640;
    double stroke_width = 2.0;
};

struct Overlays {
    Region kernel;
    std::vector<GeodesicPolygon> stars;
    std::vector<Vec2> extreme_markers;
    std::vector<std::pair<Vec2, Vec2>> gap_segments;
};

// Chart-coordinate drawing: geodesic edges are straight chords, hyperbolic
// scenes get the unit-disk boundary, one path element per layer with the
// layer name in the element id. Byte-identical for identical inputs.
std::string render_svg(const Scene& scene, const Overlays& overlays, const RenderSpec& spec);

}  // namespace starkit
