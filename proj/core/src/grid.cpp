#include "steklov/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace steklov {

TimeGrid::TimeGrid(double t0_, double dt_, std::size_t n_) : t0(t0_), dt(dt_), n(n_) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("TimeGrid: dt must be positive and finite, got " +
                                    std::to_string(dt));
    }
    if (!std::isfinite(t0)) {
        throw std::invalid_argument("TimeGrid: t0 must be finite");
    }
    if (n < 1) {
        throw std::invalid_argument("TimeGrid: need at least one grid point");
    }
}

SpaceGrid::SpaceGrid(std::vector<std::size_t> shape_, std::vector<double> spacing_,
                     std::vector<double> origin_)
    : shape(std::move(shape_)), spacing(std::move(spacing_)), origin(std::move(origin_)) {
    const std::size_t d = shape.size();
    if (d < 1 || d > 3) {
        throw std::invalid_argument("SpaceGrid: ndim must be 1, 2 or 3, got " +
                                    std::to_string(d));
    }
    if (spacing.size() != d || origin.size() != d) {
        throw std::invalid_argument("SpaceGrid: shape/spacing/origin lengths disagree");
    }
    for (std::size_t a = 0; a < d; ++a) {
        if (shape[a] < 1) {
            throw std::invalid_argument("SpaceGrid: axis " + std::to_string(a) +
                                        " has empty extent");
        }
        if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a])) {
            throw std::invalid_argument("SpaceGrid: axis " + std::to_string(a) +
                                        " spacing must be positive");
        }
        if (!std::isfinite(origin[a])) {
            throw std::invalid_argument("SpaceGrid: axis " + std::to_string(a) +
                                        " origin must be finite");
        }
    }
}

std::size_t SpaceGrid::point_count() const {
    std::size_t count = 1;
    for (std::size_t extent : shape) count *= extent;
    return count;
}

double SpaceGrid::cell_volume() const {
    double vol = 1.0;
    for (double s : spacing) vol *= s;
    return vol;
}

std::vector<double> SpaceGrid::coords(std::size_t flat) const {
    // Row-major: the last axis varies fastest.
    std::vector<double> x(ndim());
    for (std::size_t a = ndim(); a-- > 0;) {
        const std::size_t idx = flat % shape[a];
        flat /= shape[a];
        x[a] = origin[a] + static_cast<double>(idx) * spacing[a];
    }
    return x;
}

} // namespace steklov
