#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wigstat/gaussian.hpp"
#include "wigstat/harmonium.hpp"

namespace wig {

enum class Command { Gaussian, Harmonium, Spin, Classify, Dump };

// Parsed run configuration. JSON config file plus command-line overrides;
// see configs/README.md for the schema and committed examples.
struct RunConfig {
    Command command = Command::Classify;

    // state selection
    std::string state_type;  // "gaussian_pair" | "harmonium"
    std::vector<GaussianOrbital> orbitals;
    int sign = +1;
    HarmoniumParams harmonium{1.0, 0.0};
    EigenIndex eigen{0, 0};
    cplx alpha{1.0, 0.0}, beta{0.0, 0.0}, gamma{0.0, 0.0};
    std::string spin_state = "triplet";  // "singlet" | "triplet"

    int grid_points = 64;
    std::optional<double> half_width;  // overrides the balanced default
    int series_order = 20;             // generating-function truncation
    double series_x = 0.5;

    double tolerance = 1e-6;
    std::string output_path;
    std::optional<std::string> expect;  // expected classification for classify
    std::string dump_target = "slice";  // "slice" | "marginal" | "wigner"
    unsigned seed = 1;
    int random_draws = 50;
    int threads = 0;  // 0 = library default
};

RunConfig parse_config_file(const std::string& path);

// Runs the configured command and writes the report. Returns the process
// exit code: 0 all checks passed, 2 a check failed (report still written),
// 1 usage or I/O error (throws instead; the caller maps exceptions to 1).
int run(const RunConfig& config, std::ostream& report);

}  // namespace wig
