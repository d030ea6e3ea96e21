#pragma once

#include "vcfp/model.hpp"

namespace vcfp {

/// Uniform tensor-product finite-volume mesh on (0, V_F) x (0, g_max).
/// Cells are indexed i = 0..num_v-1 in voltage and j = 0..num_g-1 in
/// conductance; edge e lies between cells e-1 and e. Coordinates are
/// computed by multiplication so they are reproducible without
/// accumulated rounding.
struct Grid {
    int num_v = 0;       // voltage cells (I)
    int num_g = 0;       // conductance cells (J)
    double V_F = 1.0;
    double g_max = 8.0;  // conductance-domain truncation radius
    double h_v = 0.0;
    double h_g = 0.0;
    double g_F = 0.0;    // crossover conductance, copied from the model
    int j_F = 0;         // index of the conductance cell containing g_F

    double v_edge(int e) const { return static_cast<double>(e) * V_F / num_v; }
    double v_center(int i) const { return (static_cast<double>(i) + 0.5) * V_F / num_v; }
    double g_edge(int e) const { return static_cast<double>(e) * g_max / num_g; }
    double g_center(int j) const { return (static_cast<double>(j) + 0.5) * g_max / num_g; }

    /// A conductance row is reset-coupled iff its cell center lies
    /// strictly above g_F; ties resolve to the non-firing side.
    bool reset_row(int j) const { return g_center(j) > g_F; }

    long cells() const { return static_cast<long>(num_v) * num_g; }
    double cell_area() const { return h_v * h_g; }
};

/// Builds the mesh. Requires num_v, num_g >= 4 and g_max > g_F (otherwise
/// the reset boundary condition would be vacuous); throws
/// std::invalid_argument on violation.
Grid build_grid(int num_v, int num_g, double g_max, const ModelParams& params);

}  // namespace vcfp
