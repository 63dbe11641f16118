#pragma once

#include <cstddef>
#include <vector>

namespace steklov {

/// Uniform 1-D time lattice on the closed interval I = [t0, t0 + (n-1)*dt].
///
/// Grid points are t_j = t0 + j*dt for 0 <= j < n.  Under the left-Riemann
/// quadrature used throughout, sample j carries the cell [t_j, t_j + dt); the
/// cell of the final sample lies beyond the right endpoint of I and therefore
/// carries no weight.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 1.0;
    std::size_t n = 2;

    TimeGrid() = default;
    TimeGrid(double t0_, double dt_, std::size_t n_);

    double point(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
    double end() const { return point(n - 1); }
    double length() const { return static_cast<double>(n - 1) * dt; }

    bool operator==(const TimeGrid&) const = default;
};

/// Uniform rectangular lattice on a box in R^n, 1 <= n <= 3.
///
/// Each sample owns one cell of volume prod(spacing); spatial sums are plain
/// rectangle-rule quadrature with that weight.
struct SpaceGrid {
    std::vector<std::size_t> shape;
    std::vector<double> spacing;
    std::vector<double> origin;

    SpaceGrid() : SpaceGrid({2}, {1.0}, {0.0}) {}
    SpaceGrid(std::vector<std::size_t> shape_, std::vector<double> spacing_,
              std::vector<double> origin_);

    std::size_t ndim() const { return shape.size(); }
    std::size_t point_count() const;
    double cell_volume() const;

    /// Physical coordinates of the sample with row-major flat index.
    std::vector<double> coords(std::size_t flat) const;

    bool operator==(const SpaceGrid&) const = default;
};

} // namespace steklov
