#include "starkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "starkit/error.hpp"
#include "starkit/oracle.hpp"
#include "starkit/rng.hpp"
#include "starkit/scene.hpp"

namespace starkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_double(double v) {
    char buf[40];
    if (std::isinf(v)) return "inf";
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Model trial_model(const VerifyOptions& opts, int i) {
    switch (opts.model) {
        case ModelSelect::Euclidean: return Model::Euclidean;
        case ModelSelect::HyperbolicKlein: return Model::HyperbolicKlein;
        case ModelSelect::All: break;
    }
    // Trials 0,1 Euclidean, 2,3 Klein, ...: every (generator, model) pair
    // appears once per four trials.
    return (i % 4) >= 2 ? Model::HyperbolicKlein : Model::Euclidean;
}

// Kernel convexity: interior angles at most pi and mutual visibility of
// random internal pairs.
bool kernel_convexity_ok(const Region& kernel, std::uint64_t seed) {
    if (kernel.empty()) return true;
    const GeodesicPolygon& k = *kernel.polygon;
    for (int i = 0; i < k.size(); ++i) {
        if (interior_angle(k, i) > kPi + tol::angle) return false;
    }
    Rng rng(seed);
    const Bbox box = chart_bbox(k);
    auto sample_inside = [&]() -> std::optional<Vec2> {
        for (int attempt = 0; attempt < 400; ++attempt) {
            const Vec2 p{rng.uniform(box.lo.u, box.hi.u), rng.uniform(box.lo.v, box.hi.v)};
            if (contains(k, p) == ContainmentClass::Interior) return p;
        }
        return std::nullopt;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = sample_inside();
        const auto q = sample_inside();
        if (!p || !q) break;  // kernel thinner than the sampler can hit
        if (!sees(k, Point{k.model, *p}, Point{k.model, *q})) return false;
    }
    return true;
}

TrialRecord run_trial(const VerifyOptions& opts, int i) {
    TrialRecord rec;
    rec.index = i;
    rec.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(i));
    rec.model = trial_model(opts, i);
    rec.generator_starshaped = (i % 2) == 0;

    Rng rng(rec.seed);
    rec.n_vertices = rng.uniform_int(opts.nmin, opts.nmax);
    const std::uint64_t gen_seed = rng.next_u64();

    const GeodesicPolygon a = rec.generator_starshaped
                                  ? random_starshaped(rec.model, rec.n_vertices, gen_seed)
                                  : random_simple(rec.model, rec.n_vertices, gen_seed);

    CertifyOptions copts;
    copts.seed = rng.next_u64();
    copts.oracle_resolution = opts.resolution;
    copts.n_probes = opts.n_probes;
    if (opts.inject == InjectBug::ShiftKernel) {
        const Bbox box = chart_bbox(a);
        copts.fault_shift = {0.35 * std::max(box.width(), box.height()), 0.0};
    }
    const CertReport cert = certify(a, copts);

    rec.starshaped = cert.starshaped;
    rec.hausdorff_ek_hp = cert.hausdorff_b_vs_halfplane;
    rec.oracle_agrees = cert.oracle_agrees;
    rec.oracle_kept = cert.oracle_kept;
    rec.oracle_deep = cert.oracle_deep_nodes;
    rec.flags_ok = !cert.flagged_multi_component;
    rec.convexity_ok = kernel_convexity_ok(cert.b, rng.next_u64());
    if (!rec.generator_starshaped) {
        // Emptiness equivalence at grid resolution: a kernel thinner than one
        // grid cell (no deep nodes) cannot be asked of the grid oracle. An
        // oracle point with empty B, or a resolvable B the oracle missed
        // entirely, is a counterexample candidate.
        const bool oracle_nonempty = cert.oracle_kept > 0;
        if (cert.b.empty()) {
            rec.equivalence_ok = !oracle_nonempty;
        } else {
            rec.equivalence_ok = oracle_nonempty || cert.oracle_deep_nodes == 0;
        }
    }

    std::vector<std::string> reasons;
    const bool hausdorff_ok = !(rec.starshaped && rec.hausdorff_ek_hp > opts.hausdorff_tol);
    if (!hausdorff_ok) reasons.push_back("hausdorff");
    if (!rec.oracle_agrees) reasons.push_back("oracle");
    if (!rec.equivalence_ok) reasons.push_back("equiv");
    if (!rec.convexity_ok) reasons.push_back("convexity");
    if (!rec.flags_ok) reasons.push_back("flags");
    rec.candidate = !reasons.empty();
    for (std::size_t k = 0; k < reasons.size(); ++k) {
        if (k) rec.reasons += ',';
        rec.reasons += reasons[k];
    }
    return rec;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    if (opts.trials < 1) throw RangeError("trials must be >= 1");
    VerifyReport report;
    report.options = opts;
    report.records.resize(opts.trials);

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < opts.trials; ++i) {
        try {
            report.records[i] = run_trial(opts, i);
        } catch (const std::exception& e) {
            TrialRecord rec;
            rec.index = i;
            rec.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(i));
            rec.model = trial_model(opts, i);
            rec.generator_starshaped = (i % 2) == 0;
            rec.candidate = true;
            rec.reasons = std::string("exception:") + e.what();
            report.records[i] = rec;
        }
    }

    for (const TrialRecord& rec : report.records) {
        if (rec.starshaped) ++report.starshaped_count;
        if (std::isfinite(rec.hausdorff_ek_hp)) {
            report.max_hausdorff = std::max(report.max_hausdorff, rec.hausdorff_ek_hp);
        }
        if (rec.candidate) report.candidates.push_back(rec.index);
    }
    return report;
}

std::string VerifyReport::to_text() const {
    std::string out;
    out += "# starkit verify report\n";
    out += "# options: trials=" + std::to_string(options.trials) +
           " seed=" + std::to_string(options.seed) + " model=";
    switch (options.model) {
        case ModelSelect::Euclidean: out += "euclidean"; break;
        case ModelSelect::HyperbolicKlein: out += "hyperbolic-klein"; break;
        case ModelSelect::All: out += "all"; break;
    }
    out += " nmin=" + std::to_string(options.nmin) + " nmax=" + std::to_string(options.nmax) +
           " resolution=" + std::to_string(options.resolution);
    if (options.inject == InjectBug::ShiftKernel) out += " inject=shift-kernel";
    out += "\n";

    for (const TrialRecord& r : records) {
        out += "trial=" + std::to_string(r.index);
        out += " seed=" + std::to_string(r.seed);
        out += " model=";
        out += to_string(r.model);
        out += std::string(" gen=") + (r.generator_starshaped ? "starshaped" : "simple");
        out += " n=" + std::to_string(r.n_vertices);
        out += std::string(" starshaped=") + (r.starshaped ? "true" : "false");
        out += " dH=" + fmt_double(r.hausdorff_ek_hp);
        out += std::string(" oracle=") + (r.oracle_agrees ? "agree" : "disagree");
        out += " kept=" + std::to_string(r.oracle_kept);
        out += " deep=" + std::to_string(r.oracle_deep);
        out += std::string(" equiv=") + (r.equivalence_ok ? "ok" : "FAIL");
        out += std::string(" convex=") + (r.convexity_ok ? "ok" : "FAIL");
        out += std::string(" flags=") + (r.flags_ok ? "ok" : "FAIL");
        out += std::string(" candidate=") + (r.candidate ? "YES" : "no");
        if (!r.reasons.empty()) out += " reasons=" + r.reasons;
        out += "\n";
    }

    out += "summary trials=" + std::to_string(records.size());
    out += " starshaped=" + std::to_string(starshaped_count);
    out += " max_hausdorff=" + fmt_double(max_hausdorff);
    out += " candidates=" + std::to_string(candidates.size());
    out += "\n";
    for (int idx : candidates) {
        out += "candidate trial=" + std::to_string(idx) + " reasons=" + records[idx].reasons +
               "\n";
    }
    return out;
}

}  // namespace starkit
