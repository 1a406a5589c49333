#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wigstat/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Wigner quasidensity toolkit: exchange-statistics checks for "
                 "Gaussian pairs, harmonium eigenstates and spin multiplets"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    std::string out_path;
    double tol = -1.0;
    int threads = 0;
    long long seed = -1;
    int grid_points = 0;
    int qn = -1, qm = -1;

    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--out", out_path, "report destination (stdout when omitted)");
    app.add_option("--tol", tol, "override check tolerance");
    app.add_option("--threads", threads, "worker thread cap (0 = library default)");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--grid", grid_points, "override per-axis grid points");

    auto* gaussian = app.add_subcommand("gaussian", "Gaussian pair checks");
    auto* harmonium = app.add_subcommand("harmonium", "harmonium eigenstate checks");
    harmonium->add_option("--n", qn, "extracule quantum number");
    harmonium->add_option("--m", qm, "intracule quantum number");
    auto* spin = app.add_subcommand("spin", "spin multiplet checks");
    auto* classify = app.add_subcommand("classify", "exchange-statistics classification");
    auto* dump = app.add_subcommand("dump", "grid dump of the configured state");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        wig::RunConfig cfg = wig::parse_config_file(config_path);
        if (gaussian->parsed()) cfg.command = wig::Command::Gaussian;
        if (harmonium->parsed()) cfg.command = wig::Command::Harmonium;
        if (spin->parsed()) cfg.command = wig::Command::Spin;
        if (classify->parsed()) cfg.command = wig::Command::Classify;
        if (dump->parsed()) cfg.command = wig::Command::Dump;
        if (tol > 0.0) cfg.tolerance = tol;
        if (threads > 0) cfg.threads = threads;
        if (seed >= 0) cfg.seed = static_cast<unsigned>(seed);
        if (grid_points > 0) cfg.grid_points = grid_points;
        if (qn >= 0) cfg.eigen.n = qn;
        if (qm >= 0) cfg.eigen.m = qm;

        if (cfg.command == wig::Command::Dump) {
            // --out names the dump file; the report goes to stdout
            if (!out_path.empty()) cfg.output_path = out_path;
            return wig::run(cfg, std::cout);
        }
        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file) {
                std::cerr << "error: cannot open report destination " << out_path << '\n';
                return 1;
            }
            return wig::run(cfg, file);
        }
        return wig::run(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
