#include "starkit/svg.hpp"

#include <cmath>
#include <cstdio>

namespace starkit {

namespace {

void fmt(std::string& out, const char* spec, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    out += buf;
}

struct Mapper {
    Vec2 lo;
    double scale;
    double px;

    Vec2 to_px(Vec2 p) const {
        // v axis points up in the chart, down in SVG.
        return {(p.u - lo.u) * scale, px - (p.v - lo.v) * scale};
    }
};

void path_move_line(std::string& out, const Mapper& m, const std::vector<Vec2>& pts, bool close) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 q = m.to_px(pts[i]);
        out += i == 0 ? "M" : "L";
        fmt(out, "%.3f", q.u);
        out += ' ';
        fmt(out, "%.3f", q.v);
    }
    if (close) out += "Z";
}

void emit_path(std::string& out, const char* id, const std::string& d, const char* style) {
    out += "<path id=\"";
    out += id;
    out += "\" d=\"";
    out += d;
    out += "\" ";
    out += style;
    out += "/>\n";
}

std::string marker_subpath(const Mapper& m, Vec2 p, double r) {
    std::string d;
    const Vec2 q = m.to_px(p);
    d += "M";
    fmt(d, "%.3f", q.u - r);
    d += ' ';
    fmt(d, "%.3f", q.v);
    d += "L";
    fmt(d, "%.3f", q.u);
    d += ' ';
    fmt(d, "%.3f", q.v - r);
    d += "L";
    fmt(d, "%.3f", q.u + r);
    d += ' ';
    fmt(d, "%.3f", q.v);
    d += "L";
    fmt(d, "%.3f", q.u);
    d += ' ';
    fmt(d, "%.3f", q.v + r);
    d += "Z";
    return d;
}

}  // namespace

const char* layer_id(Layer l) {
    switch (l) {
        case Layer::Polygon: return "polygon";
        case Layer::Kernel: return "kernel";
        case Layer::StarsAtExtremes: return "stars-at-extremes";
        case Layer::ExtremeMarkers: return "extreme-markers";
        case Layer::GapSegments: return "gap-segments";
        case Layer::Probes: return "probes";
    }
    return "unknown";
}

std::optional<Layer> layer_from_string(std::string_view s) {
    for (Layer l : {Layer::Polygon, Layer::Kernel, Layer::StarsAtExtremes, Layer::ExtremeMarkers,
                    Layer::GapSegments, Layer::Probes}) {
        if (s == layer_id(l)) return l;
    }
    return std::nullopt;
}

std::string render_svg(const Scene& scene, const Overlays& overlays, const RenderSpec& spec) {
    const double px = static_cast<double>(spec.canvas_px);

    Mapper m{};
    m.px = px;
    if (scene.model == Model::HyperbolicKlein) {
        // Fixed disk framing keeps hyperbolic renders comparable.
        m.lo = {-1.05, -1.05};
        m.scale = px / 2.1;
    } else {
        Bbox box = chart_bbox(scene.polygon());
        for (const auto& [name, p] : scene.probes) {
            (void)name;
            box.lo.u = std::min(box.lo.u, p.u);
            box.lo.v = std::min(box.lo.v, p.v);
            box.hi.u = std::max(box.hi.u, p.u);
            box.hi.v = std::max(box.hi.v, p.v);
        }
        const double extent = std::max(box.width(), box.height());
        const double margin = 0.1 * extent;
        m.lo = {box.lo.u - margin, box.lo.v - margin};
        m.scale = px / (extent + 2.0 * margin);
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    fmt(out, "%.0f", px);
    out += "\" height=\"";
    fmt(out, "%.0f", px);
    out += "\" viewBox=\"0 0 ";
    fmt(out, "%.0f", px);
    out += ' ';
    fmt(out, "%.0f", px);
    out += "\">\n";

    if (scene.model == Model::HyperbolicKlein) {
        // Unit circle as two arcs.
        const Vec2 a = m.to_px({-1.0, 0.0});
        const Vec2 b = m.to_px({1.0, 0.0});
        const double r = m.scale;
        std::string d;
        d += "M";
        fmt(d, "%.3f", a.u);
        d += ' ';
        fmt(d, "%.3f", a.v);
        for (const Vec2 e : {b, a}) {
            d += "A";
            fmt(d, "%.3f", r);
            d += ' ';
            fmt(d, "%.3f", r);
            d += " 0 0 1 ";
            fmt(d, "%.3f", e.u);
            d += ' ';
            fmt(d, "%.3f", e.v);
        }
        emit_path(out, "disk", d, "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"");
    }

    for (Layer layer : spec.layers) {
        std::string d;
        switch (layer) {
            case Layer::Polygon: {
                path_move_line(d, m, scene.vertices, true);
                emit_path(out, "polygon", d,
                          "fill=\"#dce8f4\" stroke=\"#28496d\" stroke-width=\"2\"");
                break;
            }
            case Layer::Kernel: {
                if (overlays.kernel.empty()) {
                    out += "<!-- kernel: empty -->\n";
                } else {
                    path_move_line(d, m, overlays.kernel.polygon->vertices, true);
                    emit_path(out, "kernel", d,
                              "fill=\"#f4c9a2\" stroke=\"#a2511c\" stroke-width=\"2\"");
                }
                break;
            }
            case Layer::StarsAtExtremes: {
                if (overlays.stars.empty()) break;
                for (const GeodesicPolygon& s : overlays.stars) {
                    path_move_line(d, m, s.vertices, true);
                }
                emit_path(out, "stars-at-extremes", d,
                          "fill=\"none\" stroke=\"#3e8e5a\" stroke-width=\"1\"");
                break;
            }
            case Layer::ExtremeMarkers: {
                if (overlays.extreme_markers.empty()) break;
                for (const Vec2& p : overlays.extreme_markers) d += marker_subpath(m, p, 5.0);
                emit_path(out, "extreme-markers", d,
                          "fill=\"#c03434\" stroke=\"none\"");
                break;
            }
            case Layer::GapSegments: {
                if (overlays.gap_segments.empty()) break;
                for (const auto& [ga, gb] : overlays.gap_segments) {
                    path_move_line(d, m, {ga, gb}, false);
                }
                emit_path(out, "gap-segments", d,
                          "fill=\"none\" stroke=\"#cc2299\" stroke-width=\"2\" "
                          "stroke-dasharray=\"6 3\"");
                break;
            }
            case Layer::Probes: {
                if (scene.probes.empty()) break;
                for (const auto& [name, p] : scene.probes) {
                    (void)name;
                    d += marker_subpath(m, p, 4.0);
                }
                emit_path(out, "probes", d, "fill=\"#444444\" stroke=\"none\"");
                break;
            }
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace starkit
