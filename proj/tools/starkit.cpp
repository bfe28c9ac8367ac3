#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "starkit/error.hpp"
#include "starkit/oracle.hpp"
#include "starkit/scene.hpp"
#include "starkit/star.hpp"
#include "starkit/svg.hpp"
#include "starkit/verify.hpp"

using namespace starkit;

namespace {

// Exit codes: 0 success, 1 verification counterexample, 2 input error,
// 3 query precondition error.
constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

std::string fmt_coords(const GeodesicPolygon& p) {
    std::string out = "[";
    char buf[64];
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", p.vertices[i].u, p.vertices[i].v);
        out += buf;
    }
    out += "]";
    return out;
}

std::string fmt_region(const Region& r) {
    return r.empty() ? std::string("EMPTY") : fmt_coords(*r.polygon);
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

Overlays build_overlays(const Scene& scene, const std::vector<Layer>& layers) {
    const GeodesicPolygon a = scene.polygon();
    Overlays ov;
    for (Layer l : layers) {
        switch (l) {
            case Layer::Kernel:
                ov.kernel = kernel_halfplane(a);
                break;
            case Layer::StarsAtExtremes: {
                for (int idx : extreme_points(a).indices) {
                    ov.stars.push_back(star(a, a.point(idx)).polygon);
                }
                break;
            }
            case Layer::ExtremeMarkers: {
                for (int idx : extreme_points(a).indices) {
                    ov.extreme_markers.push_back(a.vertex(idx));
                }
                break;
            }
            case Layer::GapSegments: {
                // Consecutive probe pairs that fail to see each other.
                for (std::size_t i = 0; i + 1 < scene.probes.size(); i += 2) {
                    const Point p{scene.model, scene.probes[i].second};
                    const Point q{scene.model, scene.probes[i + 1].second};
                    if (contains(a, p) == ContainmentClass::Exterior ||
                        contains(a, q) == ContainmentClass::Exterior) {
                        continue;
                    }
                    if (const auto gap = gap_points(a, p, q)) {
                        ov.gap_segments.emplace_back(gap->first.pos, gap->second.pos);
                    }
                }
                break;
            }
            default:
                break;
        }
    }
    return ov;
}

int cmd_kernel(const std::string& scene_path, const std::string& method,
               const std::string& out_svg) {
    const Scene scene = load_scene_file(scene_path);
    const GeodesicPolygon a = scene.polygon();

    Region ker;
    if (method == "extreme") {
        ker = kernel_extreme(a);
        std::printf("kernel: %s\n", fmt_region(ker).c_str());
    } else if (method == "halfplane") {
        ker = kernel_halfplane(a);
        std::printf("kernel: %s\n", fmt_region(ker).c_str());
    } else {
        const Region ke = kernel_extreme(a);
        const Region kh = kernel_halfplane(a);
        std::printf("kernel.extreme: %s\n", fmt_region(ke).c_str());
        std::printf("kernel.halfplane: %s\n", fmt_region(kh).c_str());
        std::printf("hausdorff: %s\n", fmt_num(hausdorff(ke, kh)).c_str());
        ker = kh;
    }
    if (!out_svg.empty()) {
        RenderSpec spec;
        spec.layers = {Layer::Polygon, Layer::Kernel};
        Overlays ov;
        ov.kernel = ker;
        write_file(out_svg, render_svg(scene, ov, spec));
    }
    return kExitOk;
}

int cmd_star(const std::string& scene_path, const std::string& point_arg) {
    const Scene scene = load_scene_file(scene_path);
    double u = 0, v = 0;
    if (std::sscanf(point_arg.c_str(), "%lf,%lf", &u, &v) != 2) {
        throw Error("--point expects u,v");
    }
    const Point p = make_point(scene.model, u, v);
    const RadialStar s = star(scene.polygon(), p);
    std::printf("star: %s\n", fmt_coords(s.polygon).c_str());
    std::printf("breakpoints: %zu\n", s.breakpoints.size());
    return kExitOk;
}

int cmd_extreme(const std::string& scene_path) {
    const Scene scene = load_scene_file(scene_path);
    const GeodesicPolygon a = scene.polygon();
    const ExtremeSet ex = extreme_points(a);
    std::printf("extreme: %zu\n", ex.indices.size());
    for (int idx : ex.indices) {
        std::printf("vertex: %d [%.17g,%.17g] angle=%s\n", idx, a.vertices[idx].u,
                    a.vertices[idx].v, fmt_num(ex.interior_angles[idx]).c_str());
    }
    return kExitOk;
}

int cmd_certify(const std::string& scene_path, int resolution, int n_probes) {
    const Scene scene = load_scene_file(scene_path);
    CertifyOptions opts;
    opts.oracle_resolution = resolution;
    opts.n_probes = n_probes;
    const CertReport r = certify(scene.polygon(), opts);

    if (r.starshaped) {
        std::printf("STARSHAPED kernel=%d vertices\n", r.kernel.polygon->size());
    } else {
        std::printf("NOT STARSHAPED (B %s)\n", r.b.empty() ? "empty" : "non-empty");
    }
    std::printf("extreme: %zu\n", r.extreme.indices.size());
    std::printf("B: %s\n", fmt_region(r.b).c_str());
    int ok = 0;
    for (const auto& probe : r.ray_checks) ok += probe.ok ? 1 : 0;
    std::printf("ray_condition: %d/%zu probes ok%s\n", ok, r.ray_checks.size(),
                r.ray_condition_trivial
                    ? " (literal predicate: holds for any non-empty target)"
                    : "");
    std::printf("kernel: %s\n", fmt_region(r.kernel).c_str());
    std::printf("cross_check.halfplane: %s\n", fmt_region(r.halfplane_kernel).c_str());
    std::printf("cross_check.hausdorff: %s\n", fmt_num(r.hausdorff_b_vs_halfplane).c_str());
    std::printf("cross_check.oracle: %s (kept=%d deep=%d max_violation=%s step=%s)\n",
                r.oracle_agrees ? "agree" : "DISAGREE", r.oracle_kept, r.oracle_deep_nodes,
                fmt_num(r.oracle_max_violation).c_str(), fmt_num(r.oracle_grid_step).c_str());
    if (r.flagged_multi_component) std::printf("flags: multi-component\n");
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, const std::string& out_path) {
    const VerifyReport report = run_verify(opts);
    const std::string text = report.to_text();
    std::fputs(text.c_str(), stdout);
    if (!out_path.empty()) write_file(out_path, text);
    return report.ok() ? kExitOk : kExitCounterexample;
}

int cmd_render(const std::string& scene_path, const std::string& out_path,
               const std::string& layers_csv) {
    const Scene scene = load_scene_file(scene_path);
    RenderSpec spec;
    spec.layers.clear();
    std::size_t pos = 0;
    while (pos <= layers_csv.size()) {
        const std::size_t comma = layers_csv.find(',', pos);
        const std::string name = layers_csv.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto layer = layer_from_string(name);
        if (!layer) throw Error("unknown layer: " + name);
        spec.layers.push_back(*layer);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    write_file(out_path, render_svg(scene, build_overlays(scene, spec.layers), spec));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* eps = std::getenv("STARKIT_EPS")) {
        char* end = nullptr;
        const double v = std::strtod(eps, &end);
        if (end != eps && v > 0) tol::set_eps_on(v);
    }

    CLI::App app{"starkit: stars, extreme points and kernels of geodesic polygons"};
    app.require_subcommand(1);

    std::string scene_path, method = "extreme", out_path, point_arg, layers = "polygon";
    int resolution = oracle::kDefaultResolution;
    int n_probes = 32;

    auto* kernel = app.add_subcommand("kernel", "compute the kernel of a scene polygon");
    kernel->add_option("scene", scene_path)->required();
    kernel->add_option("--method", method)->check(CLI::IsMember({"extreme", "halfplane", "both"}));
    kernel->add_option("--out", out_path, "render polygon+kernel to an SVG file");

    auto* star_cmd = app.add_subcommand("star", "compute the star of the polygon at a point");
    star_cmd->add_option("scene", scene_path)->required();
    star_cmd->add_option("--point", point_arg, "center as u,v")->required();

    auto* extreme = app.add_subcommand("extreme", "list extreme vertices");
    extreme->add_option("scene", scene_path)->required();

    auto* certify_cmd = app.add_subcommand("certify", "run the starshapedness certificate");
    certify_cmd->add_option("scene", scene_path)->required();
    certify_cmd->add_option("--resolution", resolution);
    certify_cmd->add_option("--probes", n_probes);

    VerifyOptions vopts;
    std::string model_arg = "all", inject_arg;
    std::uint64_t seed = 42;
    auto* verify = app.add_subcommand("verify", "Monte-Carlo verification campaign");
    verify->add_option("--trials", vopts.trials);
    verify->add_option("--seed", seed);
    verify->add_option("--model", model_arg)
        ->check(CLI::IsMember({"euclidean", "hyperbolic-klein", "all"}));
    verify->add_option("--nmin", vopts.nmin);
    verify->add_option("--nmax", vopts.nmax);
    verify->add_option("--resolution", vopts.resolution);
    verify->add_option("--out", out_path, "also write the report to a file");
    verify->add_option("--inject-bug", inject_arg, "harness self-test")
        ->check(CLI::IsMember({"shift-kernel"}));

    auto* render = app.add_subcommand("render", "render a scene to SVG");
    render->add_option("scene", scene_path)->required();
    render->add_option("--out", out_path)->required();
    render->add_option("--layers", layers, "comma-separated layer list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (kernel->parsed()) return cmd_kernel(scene_path, method, out_path);
        if (star_cmd->parsed()) return cmd_star(scene_path, point_arg);
        if (extreme->parsed()) return cmd_extreme(scene_path);
        if (certify_cmd->parsed()) return cmd_certify(scene_path, resolution, n_probes);
        if (verify->parsed()) {
            vopts.seed = seed;
            if (model_arg == "euclidean") vopts.model = ModelSelect::Euclidean;
            else if (model_arg == "hyperbolic-klein") vopts.model = ModelSelect::HyperbolicKlein;
            else vopts.model = ModelSelect::All;
            if (inject_arg == "shift-kernel") vopts.inject = InjectBug::ShiftKernel;
            return cmd_verify(vopts, out_path);
        }
        if (render->parsed()) return cmd_render(scene_path, out_path, layers);
    } catch (const PreconditionError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitOk;
}
