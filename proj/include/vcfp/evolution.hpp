#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vcfp/diagnostics.hpp"
#include "vcfp/steady.hpp"

namespace vcfp {

/// State of a time-dependent run. The coupling is the one in force at
/// time t, built from the firing profile of the current field.
struct EvolutionState {
    DensityField field;
    double t = 0.0;
    CouplingState coupling;
    FiringProfile last_profile;
};

EvolutionState make_state(DensityField field, double t, double nu_value,
                          const ModelParams& params);

/// One record of the monitored functionals along a run.
struct TimeSample {
    double t = 0.0;
    double mass = 0.0;
    double N_total = 0.0;
    double g_in = 0.0;
    double a = 0.0;
    double psi = 0.0;
    Eigen::VectorXd h;           // conductance moments 0..K
    double cross = 0.0;          // mixed v*g moment
    double f = 0.0;              // trace at g = 0
    double entropy = 0.0;        // integral of |ln p| p
    double boundary_entropy = 0.0;
    double fisher = 0.0;
    double lq = 0.0;
    double chi2 = 0.0;
};

struct TimeSeries {
    int K = 4;
    std::vector<TimeSample> samples;
};

/// Largest stable step for the explicit substeps: the voltage advection
/// and the conductance drift limits, scaled by the safety factor and
/// capped at dt_max. The implicit diffusion imposes no constraint.
double cfl_dt(const EvolutionState& state, const Grid& grid, const ModelParams& params,
              double safety, double dt_max = 0.05);

/// Explicit upwind voltage advection over dt. Outflow through v = V_F on
/// firing rows is reinjected into the first voltage cell of the same row;
/// non-firing rows carry zero inflow on both sides. Exactly conservative.
Eigen::MatrixXd advect_v(const Eigen::MatrixXd& p, const Grid& grid,
                         const ModelParams& params, double dt);

/// Explicit upwind conductance drift over dt with zero-flux walls.
Eigen::MatrixXd advect_g(const Eigen::MatrixXd& p, const Grid& grid,
                         const CouplingState& coupling, const ModelParams& params, double dt);

/// Backward-Euler centered conductance diffusion over dt, one tridiagonal
/// solve shared by all voltage columns, zero-flux walls.
Eigen::MatrixXd diffuse_g(const Eigen::MatrixXd& p, const Grid& grid,
                          const CouplingState& coupling, const ModelParams& params, double dt);

/// One operator-split step (advection, drift, implicit diffusion) with
/// the coupling frozen at the step start. nu_after is the external rate
/// at t + dt, used to build the returned state's coupling. Throws
/// std::runtime_error when the update produces a negative density (the
/// step exceeded its stability limit).
EvolutionState step(const EvolutionState& state, double dt, double nu_after,
                    const ModelParams& params, const Grid& grid);

struct RunOptions {
    double T = 5.0;
    double sample_dt = 0.01;
    std::vector<double> snapshot_times;
    int K = 4;          // maximum recorded conductance moment, >= 2
    double q = 2.0;     // weighted-norm exponent
    double ell = 2.0;   // weighted-norm conductance weight
    double safety = 0.9;
    double dt_max = 0.05;
    double mass_tol = 1e-9;
};

struct RunResult {
    TimeSeries series;
    std::vector<std::pair<double, DensityField>> snapshots;
    DensityField final_field;
    long steps = 0;
};

/// Integrates to T with adaptive dt clipped to land exactly on sample and
/// snapshot times. Requires mass-1 initial data; aborts (with the failing
/// time in the message) if the mass drifts beyond mass_tol.
RunResult run(const DensityField& initial, double T, const RunOptions& options,
              const ModelParams& params);

/// Relative L2 mismatch between finite-difference time derivatives of the
/// recorded moments and their closure right-hand sides:
///   d/dt h1 = (−h1 + g_in + a f)/sigma_E
///   d/dt h2 = (−2 h2 + 2 g_in h1 + 2 a)/sigma_E
///   d/dt h3 = (−3 h3 + 3 g_in h2 + 6 a h1)/sigma_E
///   d/dt psi = −g_L psi − cross + V_E h1 − V_F N
/// The first skip_fraction of the samples is dropped as transient.
struct MomentOdeResiduals {
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;
    double psi = 0.0;
};

MomentOdeResiduals moment_ode_residuals(const TimeSeries& series, const ModelParams& params,
                                        double skip_fraction = 0.2);

struct InitialDataOptions {
    double v_center = -1.0;  // < 0: V_F/2
    double v_width = -1.0;   // < 0: V_F/4
    double g_center = -1.0;  // < 0: g_in at rate 0
    double g_sigma = -1.0;   // < 0: sqrt(a) at rate 0
};

/// Product of a smooth compactly supported bump in v and a Gaussian in g,
/// normalized to mass one.
DensityField make_initial_density(const Grid& grid, const ModelParams& params,
                                  const InitialDataOptions& options = {});

}  // namespace vcfp
