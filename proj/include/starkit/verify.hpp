#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starkit/star.hpp"

namespace starkit {

enum class ModelSelect { Euclidean, HyperbolicKlein, All };
enum class InjectBug { None, ShiftKernel };

struct VerifyOptions {
    int trials = 200;
    std::uint64_t seed = 42;
    ModelSelect model = ModelSelect::All;
    int nmin = 5;
    int nmax = 24;
    int resolution = 64;
    int n_probes = 32;
    InjectBug inject = InjectBug::None;
    double hausdorff_tol = 1e-6;
};

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    Model model = Model::Euclidean;
    bool generator_starshaped = false;  // trial mix: alternately constructive / unconstrained
    int n_vertices = 0;
    bool starshaped = false;
    double hausdorff_ek_hp = 0.0;
    bool oracle_agrees = true;
    int oracle_kept = 0;
    int oracle_deep = 0;
    bool equivalence_ok = true;  // (B non-empty) <=> (brute kernel non-empty), at grid resolution
    bool convexity_ok = true;   // kernel interior angles and mutual visibility
    bool flags_ok = true;       // no multi-component flags raised
    bool candidate = false;
    std::string reasons;        // comma-joined failed checks
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<TrialRecord> records;
    int starshaped_count = 0;
    double max_hausdorff = 0.0;
    std::vector<int> candidates;

    bool ok() const { return candidates.empty(); }
    // Line-oriented key=value records, one trial per line; diffs and greps
    // cleanly, byte-identical for a fixed seed.
    std::string to_text() const;
};

// The Monte-Carlo verification campaign: per trial, generate (alternately a
// constructively starshaped and an unconstrained simple polygon), certify,
// and record the cross-check metrics. Any counterexample candidate is
// retained in the report.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace starkit
