#include "starkit/scene.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "starkit/error.hpp"
#include "starkit/rng.hpp"

namespace starkit {

namespace {

constexpr double kTau = 2.0 * 3.14159265358979323846;

// Cursor over one line; keeps 1-based positions for error messages.
struct Cursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, static_cast<int>(pos) + 1, msg);
    }
    double number() {
        skip_ws();
        const char* start = text.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) fail("expected a number");
        pos += static_cast<std::size_t>(end - start);
        if (!std::isfinite(v)) fail("non-finite number");
        return v;
    }
    std::string ident() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '-')) {
            ++pos;
        }
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }
    void end_of_line() {
        skip_ws();
        if (pos < text.size()) fail("trailing characters");
    }
};

Vec2 parse_pair(Cursor& c) {
    c.expect('[');
    const double u = c.number();
    c.expect(',');
    const double v = c.number();
    c.expect(']');
    return {u, v};
}

void format_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

Scene load_scene(const std::string& text) {
    Scene scene;
    bool have_model = false, have_polygon = false, have_probes = false, have_seed = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = raw;
        Cursor c{line, line_no};
        c.skip_ws();
        if (c.pos == line.size()) continue;

        const std::string key = c.ident();
        c.expect(':');
        if (key == "model") {
            if (have_model) c.fail("duplicate model line");
            const std::string name = c.ident();
            const auto m = model_from_string(name);
            if (!m) c.fail("unknown model '" + name + "'");
            scene.model = *m;
            have_model = true;
        } else if (key == "polygon") {
            if (!have_model) c.fail("model line must come first");
            if (have_polygon) c.fail("duplicate polygon line");
            c.expect('[');
            if (!c.eat(']')) {
                do {
                    scene.vertices.push_back(parse_pair(c));
                } while (c.eat(','));
                c.expect(']');
            }
            have_polygon = true;
        } else if (key == "probes") {
            if (!have_polygon) c.fail("probes must follow the polygon");
            if (have_probes) c.fail("duplicate probes line");
            c.expect('{');
            if (!c.eat('}')) {
                do {
                    const std::string name = c.ident();
                    c.expect(':');
                    scene.probes.emplace_back(name, parse_pair(c));
                } while (c.eat(','));
                c.expect('}');
            }
            have_probes = true;
        } else if (key == "seed") {
            if (!have_polygon) c.fail("seed must follow the polygon");
            if (have_seed) c.fail("duplicate seed line");
            c.skip_ws();
            const std::size_t start = c.pos;
            if (c.pos < line.size() && (line[c.pos] == '-' || line[c.pos] == '+')) ++c.pos;
            while (c.pos < line.size() && std::isdigit(static_cast<unsigned char>(line[c.pos]))) {
                ++c.pos;
            }
            if (c.pos == start) c.fail("expected an integer seed");
            scene.seed = std::stoll(line.substr(start, c.pos - start));
            have_seed = true;
        } else {
            c.fail("unknown key '" + key + "'");
        }
        c.end_of_line();
    }
    if (!have_model) throw ParseError(line_no + 1, 1, "missing model line");
    if (!have_polygon) throw ParseError(line_no + 1, 1, "missing polygon line");

    // Domain membership first, then full polygon validation.
    for (const Vec2& v : scene.vertices) make_point(scene.model, v);
    for (const auto& [name, pos] : scene.probes) {
        (void)name;
        make_point(scene.model, pos);
    }
    const auto violations = validate(scene.polygon());
    if (!violations.empty()) throw ValidationError(violations);
    return scene;
}

std::string save_scene(const Scene& s) {
    std::string out = "model: ";
    out += to_string(s.model);
    out += "\npolygon: [";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out += ',';
        out += '[';
        format_double(out, s.vertices[i].u);
        out += ',';
        format_double(out, s.vertices[i].v);
        out += ']';
    }
    out += "]\n";
    if (!s.probes.empty()) {
        out += "probes: {";
        for (std::size_t i = 0; i < s.probes.size(); ++i) {
            if (i) out += ", ";
            out += s.probes[i].first;
            out += ": [";
            format_double(out, s.probes[i].second.u);
            out += ',';
            format_double(out, s.probes[i].second.v);
            out += ']';
        }
        out += "}\n";
    }
    if (s.seed) {
        out += "seed: " + std::to_string(*s.seed) + "\n";
    }
    return out;
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scene(buf.str());
}

void save_scene_file(const Scene& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write scene file: " + path);
    out << save_scene(s);
}

namespace {

struct GenLimits {
    double center_extent;
    double r_min, r_max;
    double clamp_norm;  // Klein only: max chart norm of any vertex
};

GenLimits limits_for(Model model) {
    if (model == Model::Euclidean) return {0.5, 0.35, 1.4, 0.0};
    return {0.22, 0.14, 0.52, 0.85};
}

}  // namespace

GeodesicPolygon random_starshaped(Model model, int n_vertices, std::uint64_t seed) {
    if (n_vertices < 3) throw RangeError("need at least 3 vertices");
    const GenLimits lim = limits_for(model);
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vec2 c{rng.uniform(-lim.center_extent, lim.center_extent),
               rng.uniform(-lim.center_extent, lim.center_extent)};
        std::vector<double> angles(n_vertices);
        for (double& a : angles) a = rng.uniform(0.0, kTau);
        std::sort(angles.begin(), angles.end());
        double min_gap = angles.front() + kTau - angles.back();
        for (int i = 1; i < n_vertices; ++i) min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        if (min_gap < kTau / (12.0 * n_vertices)) continue;

        std::vector<Vec2> pts(n_vertices);
        bool ok = true;
        for (int i = 0; i < n_vertices; ++i) {
            double r = rng.uniform(lim.r_min, lim.r_max);
            Vec2 p = c + Vec2{r * std::cos(angles[i]), r * std::sin(angles[i])};
            if (model == Model::HyperbolicKlein && norm(p) > lim.clamp_norm) {
                // Cap the radius so the vertex stays well inside the disk.
                double lo = 0.0, hi = r;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const Vec2 q = c + Vec2{mid * std::cos(angles[i]), mid * std::sin(angles[i])};
                    (norm(q) > lim.clamp_norm ? hi : lo) = mid;
                }
                r = lo;
                if (r < 0.5 * lim.r_min) {
                    ok = false;
                    break;
                }
                p = c + Vec2{r * std::cos(angles[i]), r * std::sin(angles[i])};
            }
            pts[i] = p;
        }
        if (!ok) continue;
        GeodesicPolygon poly{model, std::move(pts)};
        if (validate(poly).empty()) return poly;
    }
    throw Error("random_starshaped: no valid polygon after bounded retries");
}

GeodesicPolygon random_simple(Model model, int n_vertices, std::uint64_t seed) {
    if (n_vertices < 3) throw RangeError("need at least 3 vertices");
    Rng rng(seed);
    const double extent = model == Model::Euclidean ? 1.0 : 0.55;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Vec2> pts(n_vertices);
        for (Vec2& p : pts) p = {rng.uniform(-extent, extent), rng.uniform(-extent, extent)};

        // 2-opt untangling: reversing the sub-path between two properly
        // crossing edges strictly shortens the perimeter, so this terminates.
        bool changed = true;
        int rounds = 0;
        while (changed && rounds++ < 20 * n_vertices * n_vertices) {
            changed = false;
            for (int i = 0; i < n_vertices && !changed; ++i) {
                for (int j = i + 1; j < n_vertices && !changed; ++j) {
                    if (j == i + 1 || (i == 0 && j == n_vertices - 1)) continue;
                    const Vec2 a = pts[i], b = pts[(i + 1) % n_vertices];
                    const Vec2 c = pts[j], d = pts[(j + 1) % n_vertices];
                    const double s1 = cross(b - a, c - a), s2 = cross(b - a, d - a);
                    const double s3 = cross(d - c, a - c), s4 = cross(d - c, b - c);
                    if (((s1 > 0) != (s2 > 0)) && ((s3 > 0) != (s4 > 0))) {
                        std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                        changed = true;
                    }
                }
            }
        }
        GeodesicPolygon poly{model, std::move(pts)};
        if (chart_area(poly) < 0.0) {
            std::reverse(poly.vertices.begin(), poly.vertices.end());
        }
        if (validate(poly).empty()) return poly;
    }
    throw Error("random_simple: no valid polygon after bounded retries");
}

}  // namespace starkit
