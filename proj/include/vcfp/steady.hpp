#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <stdexcept>

#include "vcfp/density.hpp"

namespace vcfp {

/// Sparse finite-volume operator of the stationary equation in the
/// symmetrized unknown q = exp((g - g_in)^2/(2a)) * p. Unknowns are
/// flattened as k = i + num_v * j. Each matrix row is the flux balance of
/// one cell: upwind voltage transport, Gaussian-weighted conductance
/// diffusion with zero-flux walls, and the reset coupling that redirects
/// the outflow of the last voltage cell of every firing row into the
/// first. Rows have positive diagonal and nonpositive off-diagonal
/// entries, and every column sums to zero (summing all balances yields a
/// zero total mass rate).
struct DiscreteOperator {
    Grid grid;
    CouplingState coupling;
    Eigen::SparseMatrix<double> matrix;
    Eigen::VectorXd center_weight;  // exp(-(g_j - g_in)^2/(2a)) per conductance cell

    long dimension() const { return matrix.rows(); }

    /// L1 norm weighted by the cell mass measure of the p-variable:
    /// sum |x_{ij}| * center_weight_j * h_v * h_g.
    double mass_norm(const Eigen::VectorXd& x) const;

    /// p_{ij} = center_weight_j * q_{ij}.
    DensityField to_density(const Eigen::VectorXd& q) const;
};

DiscreteOperator assemble(const Grid& grid, const CouplingState& coupling,
                          const ModelParams& params);

/// Thrown when the null-vector iteration fails to reach the requested
/// residual; carries the last mass-weighted residual for diagnosis.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& msg, double residual)
        : std::runtime_error(msg), last_residual(residual) {}
    double last_residual;
};

struct SteadySolution {
    DensityField field;   // nonnegative, mass-1 density
    Eigen::VectorXd q;    // symmetrized unknown, mass-normalized
    double residual = 0.0;
    int iterations = 0;
};

/// Shifted inverse iteration on the singular operator: factor
/// (A + shift*I) once with shift = 1e-3 * min positive diagonal entry and
/// iterate until ||A q|| <= tol * ||q|| in the mass-weighted norm. The
/// iterates stay nonnegative from a nonnegative start. The result is
/// converted to the density variable and normalized to mass one.
SteadySolution solve_null_vector(const DiscreteOperator& op, double tol = 1e-10,
                                 int max_iter = 50,
                                 const Eigen::VectorXd* initial = nullptr);

/// Discrete firing profile of a density: N_j = J_v(V_F, g_j) * p(I-1, j)
/// on reset rows, zero elsewhere.
FiringProfile firing_profile(const DensityField& field, const Grid& grid,
                             const ModelParams& params);

}  // namespace vcfp
