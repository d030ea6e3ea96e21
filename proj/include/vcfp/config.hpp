#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vcfp/evolution.hpp"
#include "vcfp/particle.hpp"

namespace vcfp {

/// Raised on any configuration problem; the message names the offending
/// section.key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full run configuration. Sections and keys match the documented
/// configuration-file grammar ([section] headers, key = value lines,
/// '#' comments); unknown keys are errors.
struct RunConfig {
    ModelParams model;
    double frozen_rate = 0.0;  // network rate closing the stationary coupling

    struct GridSection {
        int I = 128;
        int J = 256;
        double g_max = 8.0;
    } grid;

    struct SolverSection {
        double tol = 1e-10;
        int max_iter = 50;
        double safety = 0.9;
        double dt_max = 0.05;
        double fp_tol = 1e-3;  // fixed-point rate tolerance
    } solver;

    struct RunSection {
        double T = 5.0;
        double sample_dt = 0.01;
        std::vector<double> snapshot_times;
        int K = 4;
        double q = 2.0;
        double ell = 2.0;
        double mass_tol = 1e-9;
        InitialDataOptions init;
    } run;

    struct OracleSection {
        long n = 100000;
        double dt = 1e-3;
        double T = 10.0;
        std::uint64_t seed = 12345;
        bool mean_field = false;
        double rate_window = -1.0;  // < 0: 10*dt
        double sample_dt = 0.05;
    } oracle;

    struct OutputSection {
        std::string dir = "out";
        std::string prefix = "vcfp";
    } output;

    Grid make_grid() const { return build_grid(grid.I, grid.J, grid.g_max, model); }
    RunOptions run_options() const;
    OracleOptions oracle_options() const;
};

/// Parses a configuration file; throws ConfigError naming the offending
/// key on unknown keys, parse failures, or violated constraints.
RunConfig load_config(const std::string& path);

/// Parses configuration text (same grammar as the file).
RunConfig parse_config(const std::string& text, const RunConfig& base = {});

/// Applies a "section.key=value" override.
void apply_override(RunConfig& config, const std::string& assignment);

/// Re-checks every constraint; throws ConfigError with the key name.
void validate_config(const RunConfig& config);

/// One line per key: "section.key  default  description (units)".
std::string config_key_help();

}  // namespace vcfp
