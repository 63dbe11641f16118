#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "steklov/grid.hpp"

namespace steklov {

/// Sampled scalar field v(x, t) over SpaceGrid x TimeGrid.
///
/// Storage is space-major / time-minor: flat index = spatial * time.n + j.
/// All values are finite 64-bit floats; Fields are immutable by convention
/// once constructed and safe to share across threads read-only.
struct Field {
    SpaceGrid space;
    TimeGrid time;
    std::vector<double> values;

    std::size_t spatial_count() const { return space.point_count(); }
    std::size_t value_count() const { return spatial_count() * time.n; }

    double at(std::size_t spatial, std::size_t j) const {
        return values[spatial * time.n + j];
    }
    double& at(std::size_t spatial, std::size_t j) {
        return values[spatial * time.n + j];
    }

    /// One time slice as a view over strided storage is not possible with the
    /// chosen layout; this copies the slice out.
    std::vector<double> time_slice(std::size_t j) const;

    /// max |v| over all samples; the scale used by relative tolerances.
    double max_abs() const;
};

/// A single spatial sample set, i.e. one element of the discrete L^q(E).
struct SpaceSlice {
    SpaceGrid space;
    std::vector<double> values;

    double max_abs() const;
};

using FieldSampler = std::function<double(std::span<const double> x, double t)>;

/// Builds a Field by evaluating `sampler` at every grid point.
/// Throws std::invalid_argument naming the offending point if the sampler
/// returns a non-finite value.
Field make_field(const SpaceGrid& space, const TimeGrid& time, const FieldSampler& sampler);

/// Point evaluation of the zero extension of v beyond I, left-constant in
/// time inside I: returns the sample at the nearest grid time below t when
/// t lies in [t0, end], and 0 otherwise.
double sample_extended(const Field& field, std::size_t spatial_flat, double t);

/// Validates the Field invariants (finite values, length = grid product).
/// Throws std::invalid_argument on violation.
void validate_field(const Field& field);

} // namespace steklov
