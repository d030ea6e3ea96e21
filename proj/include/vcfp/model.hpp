#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace vcfp {

/// External input rate nu(t): a baseline constant plus an optional
/// piecewise-constant schedule. Each schedule entry (t_k, value_k) holds
/// from t_k until the next entry starts.
struct ExternalRate {
    double base = 1.0;
    std::vector<std::pair<double, double>> schedule;  // sorted by time

    double at(double t) const;
};

/// Physical constants of the voltage-conductance model. The reset
/// potential is fixed to 0 and not stored.
struct ModelParams {
    double g_L = 1.0;      // leak conductance, > 0
    double V_E = 4.0;      // excitatory reversal potential
    double V_F = 1.0;      // firing threshold, 0 < V_F < V_E
    double sigma_E = 1.0;  // conductance decay time, > 0
    double S_E = 0.0;      // recurrent synaptic strength, >= 0
    double f_E = 1.0;      // external-input synaptic strength, > 0
    double N_E = 1.0;      // coupling normalization, > 0
    double nu_m = 0.1;     // lower bound on nu(t), > 0
    double nu_M = 10.0;    // upper bound on nu(t), >= nu_m
    ExternalRate nu;

    /// Crossover conductance: below it the voltage drift at the firing
    /// threshold points inward and neurons cannot fire.
    double g_F() const { return g_L * V_F / (V_E - V_F); }

    /// Throws std::invalid_argument naming the offending field
    /// ("model.<key>: ...") on any violated constraint.
    void validate() const;
};

/// Drift/noise coefficients closing the nonlinearity at one time level.
/// Built from the network firing rate by coupling_from_rate so that
///   g_in = f_E*nu + S_E*rate,   a = (f_E^2*nu + S_E^2/N_E*rate) / (2*sigma_E).
struct CouplingState {
    double total_rate = 0.0;  // network firing rate, >= 0
    double g_in = 0.0;        // input conductance
    double a = 0.0;           // synaptic noise intensity, > 0
};

CouplingState coupling_from_rate(double total_rate, double nu_value, const ModelParams& params);

/// Regime thresholds derived from the coupling strength.
struct RegimeReport {
    double g_F = 0.0;
    double lambda_E = 0.0;        // lambda_E*V_F = S_E/sigma_E + S_E^2/(2*N_E*sigma_E)
    double omega_E = 0.0;         // sigma_E*omega_E = (V_E/V_F)(S_E + S_E^2/(2*N_E)) - 1
    double zeta = 0.0;            // (S_E*(V_E - V_F)/V_F - 1)/sigma_E
    double coupling_ratio = 0.0;  // S_E/f_E, recorded for the user
    bool weak_exists = false;     // (V_E/V_F)*S_E < 1: a network steady state exists
    bool strong_no_steady = false;  // strong connection + strong noise: none exists
};

RegimeReport classify_regime(const ModelParams& params, double nu_value);

/// Voltage flux J_v(v,g) = -g_L*v + g*(V_E - v). Defined for all v, g.
inline double flux_v(double v, double g, const ModelParams& params) {
    return -params.g_L * v + g * (params.V_E - v);
}

/// Conductance drift J_g(g) = (g_in - g)/sigma_E.
inline double flux_g(double g, const CouplingState& coupling, const ModelParams& params) {
    return (coupling.g_in - g) / params.sigma_E;
}

/// Unnormalized Gaussian weight exp(-(g - g_in)^2 / (2a)) shared by the
/// symmetrized stationary operator and the equilibrium marginal.
inline double maxwellian_weight(double g, const CouplingState& coupling) {
    const double d = g - coupling.g_in;
    return std::exp(-d * d / (2.0 * coupling.a));
}

}  // namespace vcfp
