#pragma once

#include <string>
#include <vector>

#include "vcfp/evolution.hpp"
#include "vcfp/fixed_point.hpp"

namespace vcfp {

/// Formats a double with 17 significant digits (round-trip exact).
std::string fmt17(double x);

/// Header "v,g,p", one row per cell center, voltage-major order.
void write_density_csv(const std::string& path, const DensityField& field);

/// Header "g,phi".
void write_marginal_csv(const std::string& path, const Grid& grid,
                        const Eigen::VectorXd& marginal);

/// Header "g,N".
void write_firing_csv(const std::string& path, const Grid& grid, const FiringProfile& profile);

/// Header "x,psi,lower,upper,residual".
void write_scan_csv(const std::string& path, const std::vector<PsiSample>& samples);

/// Header "t,mass,N_total,g_in,a,psi,h1,h2,h3,h4,f,entropy,lq_monitor,chi2".
void write_timeseries_csv(const std::string& path, const TimeSeries& series);

/// Header "v,g,count", voltage-major order.
void write_histogram_csv(const std::string& path, const Grid& grid,
                         const Eigen::MatrixXd& counts);

/// Reads back a density CSV written by write_density_csv.
DensityField read_density_csv(const std::string& path, const Grid& grid);

}  // namespace vcfp
