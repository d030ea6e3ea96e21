#pragma once

#include <Eigen/Dense>

#include "vcfp/grid.hpp"

namespace vcfp {

/// Cell-averaged probability density on a Grid. values(i, j) is the
/// average over the cell with voltage index i and conductance index j.
struct DensityField {
    Grid grid;
    Eigen::MatrixXd values;  // num_v x num_g, nonnegative

    double mass() const { return values.sum() * grid.cell_area(); }
};

/// Total probability mass; throws on a field/grid dimension mismatch.
double cell_mass(const DensityField& field, const Grid& grid);

/// Conductance marginal per cell: phi_j = sum_i p(i,j) * h_v.
Eigen::VectorXd marginal_g(const DensityField& field, const Grid& grid);

/// Per-conductance-cell firing density N_j and its integral. N_j is the
/// discrete outflow flux through the v = V_F edge, i.e. exactly the mass
/// the scheme removes and reinjects; zero on non-reset rows.
struct FiringProfile {
    Eigen::VectorXd density;  // size num_g
    double total = 0.0;       // sum_j density_j * h_g
};

}  // namespace vcfp
