#include <iostream>

#include <CLI11.hpp>

#include "zafa/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"zafa: central Fourier algebra computations for finite groups"};
    app.require_subcommand(1);

    zafa::RunConfig config;
    bool serial = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--catalog", config.catalog,
                        "catalog group names (comma separated; 'none' for empty)")
            ->delimiter(',');
        cmd->add_option("--spec", config.spec_files, "JSON spec file (repeatable)");
        cmd->add_option("--tol", config.tolerance, "table verification tolerance");
        cmd->add_option("--cache-dir", config.cache_dir,
                        "character-table cache directory (default ZAFA_CACHE_DIR or ./.zafa-cache)");
        cmd->add_flag("--serial", serial, "run kernels on the serial reference path");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "run a task and write one report");
    add_common(run_cmd);
    run_cmd->add_option("--task", config.task,
                        "table | am | fusion | su2-deriv | hypergroup-check");
    run_cmd->add_option("--out", config.out_path, "report path (default stdout)");
    run_cmd->add_option("--format", config.format, "json | csv");
    run_cmd->add_flag("--timings", config.timings, "include wall-clock columns");
    run_cmd->add_option("--lmax", config.su2_lmax, "largest level for su2-deriv");
    run_cmd->add_option("--zgrid", config.su2_grid, "circle-grid size for su2-deriv");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the cross-module invariant suite");
    add_common(verify_cmd);
    verify_cmd
        ->add_flag("--inject-corruption", config.inject_corruption,
                   "corrupt the first table (negative control)")
        ->group("");  // hidden test hook

    CLI11_PARSE(app, argc, argv);
    config.exec = serial ? zafa::Exec::serial : zafa::Exec::parallel;

    if (verify_cmd->parsed()) {
        const zafa::VerifySummary summary = zafa::verify_suite(config, std::cout);
        return summary.failures == 0 ? 0 : 1;
    }
    return zafa::run(config);
}
