#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcfp/steady.hpp"

namespace vcfp {

/// One evaluation of the firing-rate map Psi: the frozen-coupling steady
/// problem is solved with the coupling built from the input rate x and
/// its total firing rate is returned. psi_trace is the alternate
/// expression V_E * integral of g p(0,g) dg computed from the first
/// voltage cell; the two agree up to discretization error. lower/upper
/// are the analytic Gaussian-moment bounds on Psi(x).
struct PsiSample {
    double x = 0.0;
    double psi = 0.0;
    double psi_trace = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double residual = 0.0;
    bool converged = false;
    std::string error;
};

/// Analytic bounds on Psi for a given coupling:
///   V_F*Psi >= -V_F + (V_E - V_F)(g_in + sqrt(a/(2 pi)) exp(-g_in^2/(2a)))
///   V_F*Psi <=  V_E (g_in + sqrt(2a/pi) exp(-g_in^2/(2a)))
std::pair<double, double> psi_bounds(const CouplingState& coupling, const ModelParams& params);

/// Evaluates Psi(x) with constant nu = nu(0). The grid is extended in the
/// conductance direction (same cell widths) whenever g_max < g_in + 6
/// sqrt(a), so the Gaussian tail stays negligible for every input rate.
PsiSample evaluate_psi(double x, const ModelParams& params, const Grid& grid,
                       double tol = 1e-10);

/// Evaluates Psi on a sorted ladder of rates; per-sample solver failures
/// are recorded on the sample and the scan continues.
std::vector<PsiSample> scan_psi(const ModelParams& params, const std::vector<double>& xs,
                                const Grid& grid, double tol = 1e-10);

/// Default scan ladder {0} plus a geometric ladder 0.1 * 2^k, k = 0..8.
std::vector<double> default_scan_ladder();

/// Brackets [x_lo, x_hi] where Psi(x) - x changes sign between
/// consecutive converged samples.
std::vector<std::pair<double, double>> detect_sign_changes(const std::vector<PsiSample>& samples);

struct FixedPointResult {
    double rate = 0.0;      // N* with |Psi(N*) - N*| <= tol
    double psi = 0.0;
    double residual = 0.0;  // |Psi(N*) - N*|
    int evaluations = 0;
};

/// Bisection on x -> Psi(x) - x. Requires a sign change over
/// [x_lo, x_hi]; throws std::invalid_argument otherwise.
FixedPointResult find_fixed_point(const ModelParams& params, double x_lo, double x_hi,
                                  double tol, const Grid& grid, double solver_tol = 1e-10,
                                  int max_bisections = 80);

/// Scans the default ladder, extending it geometrically up to x_max; on a
/// sign change runs the bisection, otherwise returns nullopt ("no fixed
/// point detected in range").
std::optional<FixedPointResult> auto_fixed_point(const ModelParams& params, const Grid& grid,
                                                 double tol, double x_max = 100.0,
                                                 double solver_tol = 1e-10);

}  // namespace vcfp
