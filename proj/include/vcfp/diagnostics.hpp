#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vcfp/density.hpp"

namespace vcfp {

/// Moments of a density by midpoint quadrature. h[k] is the k-th
/// conductance moment (h[0] = mass), psi the mean voltage, cross the
/// mixed moment of v*g, and f the boundary trace at g = 0 approximated
/// by the first conductance cell average.
struct Moments {
    double psi = 0.0;
    Eigen::VectorXd h;  // size K+1
    double cross = 0.0;
    double f = 0.0;
};

Moments moments(const DensityField& field, const Grid& grid, int K);

/// Entropy-type functionals: the absolute entropy integral, the outflow
/// entropy flux through the firing boundary (nonnegative by
/// construction), and the Fisher information of the conductance
/// direction.
struct EntropyFunctionals {
    double abs_entropy = 0.0;    // integral of |ln p| p
    double boundary_flux = 0.0;  // sum_j N_j ln(g_j V_E / J_v(V_F, g_j)) h_g
    double fisher = 0.0;         // integral of a |d_g p|^2 / p
};

EntropyFunctionals entropy_functionals(const DensityField& field, const Grid& grid,
                                       const CouplingState& coupling,
                                       const ModelParams& params);

/// Chi-square distance of a conductance marginal to the equilibrium
/// Maxwellian truncated and renormalized on (0, g_max):
/// sum_j M_j (phi_j/M_j - 1)^2 h_g.
double chi2_distance(const Eigen::VectorXd& marginal, const CouplingState& coupling,
                     const Grid& grid);

/// Weighted norm sum (1+g)^(ell+q-1) p^q over the grid.
double lq_monitor(const DensityField& field, const Grid& grid, double q, double ell);

/// Least-squares exponent of ln y against t over a time window.
struct RateFit {
    double rate = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    double t0 = 0.0, t1 = 0.0;
    int samples_used = 0;
};

/// Uses only samples with t in [t0, t1] and y > 0; throws
/// std::invalid_argument when fewer than 5 remain.
RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& y, double t0,
                 double t1);

/// Cell-center quadrature of the voltage flux integral at each voltage:
/// row i holds sum_j J_v(v_i, g_j) p(i,j) h_g. For the stationary
/// solution this profile is constant in v up to O(h).
Eigen::VectorXd flux_profile(const DensityField& field, const Grid& grid,
                             const ModelParams& params);

/// Closed-form integral of exp(-(g - g_in)^2/(2a)) over (0, G).
double maxwellian_mass(const CouplingState& coupling, double G);

/// Equilibrium Maxwellian truncated and renormalized on (0, g_max),
/// sampled at cell centers.
Eigen::VectorXd truncated_maxwellian(const CouplingState& coupling, const Grid& grid);

/// Mean of the truncated, renormalized Maxwellian on (0, G), closed form.
double maxwellian_mean(const CouplingState& coupling, double G);

/// Kolmogorov-Smirnov distance between conductance samples and the
/// Maxwellian equilibrium law on (0, infinity).
double ks_distance_to_maxwellian(std::vector<double> samples, const CouplingState& coupling);

}  // namespace vcfp
