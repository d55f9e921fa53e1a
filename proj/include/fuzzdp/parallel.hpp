#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzdp/dp_metric.hpp"

namespace fuzzdp::par {

/// Dense row-major table. Each entry is computed independently, so parallel
/// and serial fills agree bit for bit.
struct Table {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

/// Symmetric d_p matrix with a zero diagonal.
Table distance_matrix(std::span<const FuzzySet> members, PNorm p);
Table distance_matrix_serial(std::span<const FuzzySet> members, PNorm p);

/// omega(members[i], h_grid[j]).
Table modulus_table(std::span<const FuzzySet> members, std::span<const double> h_grid, PNorm p);
Table modulus_table_serial(std::span<const FuzzySet> members, std::span<const double> h_grid,
                           PNorm p);

/// |members[i]|^{radii[j]}.
Table residual_table(std::span<const FuzzySet> members, std::span<const double> radii, PNorm p);
Table residual_table_serial(std::span<const FuzzySet> members, std::span<const double> radii,
                            PNorm p);

/// Threads the parallel kernels will use.
int max_threads();

}  // namespace fuzzdp::par
