#pragma once

#include <cstdint>
#include <optional>

#include "vcfp/evolution.hpp"

namespace vcfp {

/// Microscopic ensemble whose law follows the kinetic equation:
/// deterministic voltage drift with threshold reset, Ornstein-Uhlenbeck
/// conductance with reflection at g = 0.
struct ParticleEnsemble {
    Eigen::VectorXd v;
    Eigen::VectorXd g;
    double t = 0.0;
    std::uint64_t seed = 0;
    long long spike_count = 0;
};

struct OracleOptions {
    long n = 100000;
    double T = 10.0;
    double dt = 1e-3;
    std::uint64_t seed = 12345;
    bool mean_field = false;     // false: coupling frozen at frozen_rate
    double frozen_rate = 0.0;    // network rate closing the frozen coupling
    double rate_window = -1.0;   // < 0: 10*dt
    double sample_dt = 0.05;
};

struct OracleResult {
    ParticleEnsemble ensemble;
    TimeSeries series;          // empirical columns on the evolution schema
    DensityField histogram;     // counts normalized to a density on the grid
    Eigen::MatrixXd counts;     // raw cell counts at final time
    double empirical_rate = 0.0;  // spikes over the second half of the run
};

/// Euler-Maruyama simulation: dv = J_v dt, dg = J_g dt + sqrt(2a/sigma_E) dW,
/// reflection g <- |g|, reset v -> 0 on crossing V_F with g unchanged.
/// In mean-field mode the windowed empirical spike rate feeds the
/// coupling each step. Aborts on non-finite particle states.
OracleResult simulate(const ModelParams& params, const Grid& grid,
                      const OracleOptions& options);

}  // namespace vcfp
