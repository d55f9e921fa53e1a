#include "fuzzdp/parallel.hpp"

#include <exception>
#include <utility>

#include <omp.h>

namespace fuzzdp::par {

namespace {

// Runs f(k) for k in [0, n) across threads. The first exception thrown by
// any task is rethrown on the calling thread after the loop.
template <class F>
void for_each_task(std::size_t n, F&& f) {
    std::exception_ptr first;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            f(static_cast<std::size_t>(k));
        } catch (...) {
#pragma omp critical(fuzzdp_task_error)
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
}

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

Table square(std::size_t n) { return Table{n, n, std::vector<double>(n * n, 0.0)}; }

}  // namespace

Table distance_matrix(std::span<const FuzzySet> members, PNorm p) {
    Table t = square(members.size());
    if (members.size() < 2) return t;
    const auto pairs = upper_pairs(members.size());
    for_each_task(pairs.size(), [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        t(i, j) = t(j, i) = dp_distance(members[i], members[j], p);
    });
    return t;
}

Table distance_matrix_serial(std::span<const FuzzySet> members, PNorm p) {
    Table t = square(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            t(i, j) = t(j, i) = dp_distance(members[i], members[j], p);
    return t;
}

Table modulus_table(std::span<const FuzzySet> members, std::span<const double> h_grid, PNorm p) {
    Table t{members.size(), h_grid.size(), std::vector<double>(members.size() * h_grid.size())};
    for_each_task(t.data.size(), [&](std::size_t k) {
        t.data[k] = p_mean_modulus(members[k / t.cols], h_grid[k % t.cols], p);
    });
    return t;
}

Table modulus_table_serial(std::span<const FuzzySet> members, std::span<const double> h_grid,
                           PNorm p) {
    Table t{members.size(), h_grid.size(), std::vector<double>(members.size() * h_grid.size())};
    for (std::size_t i = 0; i < t.rows; ++i)
        for (std::size_t j = 0; j < t.cols; ++j) t(i, j) = p_mean_modulus(members[i], h_grid[j], p);
    return t;
}

Table residual_table(std::span<const FuzzySet> members, std::span<const double> radii, PNorm p) {
    Table t{members.size(), radii.size(), std::vector<double>(members.size() * radii.size())};
    for_each_task(t.data.size(), [&](std::size_t k) {
        t.data[k] = ball_residual(members[k / t.cols], radii[k % t.cols], p);
    });
    return t;
}

Table residual_table_serial(std::span<const FuzzySet> members, std::span<const double> radii,
                            PNorm p) {
    Table t{members.size(), radii.size(), std::vector<double>(members.size() * radii.size())};
    for (std::size_t i = 0; i < t.rows; ++i)
        for (std::size_t j = 0; j < t.cols; ++j) t(i, j) = ball_residual(members[i], radii[j], p);
    return t;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace fuzzdp::par
