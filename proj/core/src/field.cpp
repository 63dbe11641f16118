#include "steklov/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace steklov {

std::vector<double> Field::time_slice(std::size_t j) const {
    const std::size_t ns = spatial_count();
    std::vector<double> out(ns);
    for (std::size_t s = 0; s < ns; ++s) out[s] = at(s, j);
    return out;
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double SpaceSlice::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

Field make_field(const SpaceGrid& space, const TimeGrid& time, const FieldSampler& sampler) {
    if (time.n < 2) {
        throw std::invalid_argument("make_field: time grid needs at least 2 points");
    }
    Field field{space, time, std::vector<double>(space.point_count() * time.n)};
    const std::size_t ns = field.spatial_count();
    for (std::size_t s = 0; s < ns; ++s) {
        const std::vector<double> x = space.coords(s);
        for (std::size_t j = 0; j < time.n; ++j) {
            const double t = time.point(j);
            const double v = sampler(x, t);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "make_field: sampler returned non-finite value at x = (";
                for (std::size_t a = 0; a < x.size(); ++a) msg << (a ? ", " : "") << x[a];
                msg << "), t = " << t;
                throw std::invalid_argument(msg.str());
            }
            field.at(s, j) = v;
        }
    }
    return field;
}

double sample_extended(const Field& field, std::size_t spatial_flat, double t) {
    if (spatial_flat >= field.spatial_count()) {
        throw std::invalid_argument("sample_extended: spatial index out of range");
    }
    const TimeGrid& time = field.time;
    if (t < time.t0 || t > time.end()) return 0.0;
    auto j = static_cast<std::size_t>(std::floor((t - time.t0) / time.dt));
    if (j >= time.n) j = time.n - 1;
    return field.at(spatial_flat, j);
}

void validate_field(const Field& field) {
    if (field.values.size() != field.value_count()) {
        throw std::invalid_argument("Field: values length " +
                                    std::to_string(field.values.size()) +
                                    " does not match grid product " +
                                    std::to_string(field.value_count()));
    }
    for (double v : field.values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Field: non-finite value in payload");
        }
    }
}

} // namespace steklov
