#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zafa/numeric.hpp"

namespace zafa {

/// Batch-run configuration, one task over a list of group or hypergroup
/// inputs.  All tolerances default to the module defaults.
struct RunConfig {
    std::vector<std::string> catalog;     // catalog names; "none" clears the default
    std::vector<std::string> spec_files;  // JSON spec documents
    std::string task = "am";              // table | am | fusion | su2-deriv | hypergroup-check
    std::string out_path;                 // empty -> stdout
    std::string format = "json";          // json | csv
    double tolerance = 1e-8;              // table verification tolerance
    std::string cache_dir;                // empty -> ZAFA_CACHE_DIR or ./.zafa-cache
    bool timings = false;                 // add wall-clock columns (not byte-reproducible)
    int su2_lmax = 200;
    int su2_grid = 100;
    bool inject_corruption = false;       // verify-suite negative control
    Exec exec = Exec::parallel;
};

/// Runs the task and writes one report document.  Returns 0 on success,
/// 1 when any per-input computation failed (failures are report rows),
/// 2 on malformed configuration, malformed specs, or I/O errors (in which
/// case no partial report is written).
int run(const RunConfig& config);

struct VerifySummary {
    int checks = 0;
    int failures = 0;
    double max_residual = 0.0;
};

/// Cross-module invariant suite (orthogonality, fusion, norms, diagonal,
/// product law, derivation identity, hypergroup axioms) over the catalog;
/// one result line per check.  Failures are data, not exceptions.
VerifySummary verify_suite(const RunConfig& config, std::ostream& out);

}  // namespace zafa
