#include "steklov/steklov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace steklov {

namespace {

// Prefix sums over the live cells of one spatial series.  Cell m of the time
// lattice is [t_m, t_m + dt); only cells 0 .. n-2 lie inside I, so the prefix
// has length n (live count n-1, plus the leading zero).  Window sums for both
// the restricted and the zero-extended operator are differences of this
// array; the extended operator clamps its window to the live range, which is
// exactly the extension by zero.
//
// The running sums are Neumaier-compensated, held as separate (main, comp)
// pairs.  Differencing plain prefixes leaves an absolute error of order
// eps * |prefix|, which the 1e-12 identities cannot absorb once the grid is
// fine (the time-derivative check divides by dt).  Differencing main and
// compensation separately keeps window sums accurate relative to the window.
struct PrefixSums {
    std::vector<double> main;
    std::vector<double> comp;

    double window_sum(std::size_t begin, std::size_t end) const {
        return (main[end] - main[begin]) + (comp[end] - comp[begin]);
    }
};

PrefixSums build_prefix(const double* series, std::size_t live_count) {
    PrefixSums prefix;
    prefix.main.assign(live_count + 1, 0.0);
    prefix.comp.assign(live_count + 1, 0.0);
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t m = 0; m < live_count; ++m) {
        const double v = series[m];
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
        prefix.main[m + 1] = sum;
        prefix.comp[m + 1] = comp;
    }
    return prefix;
}

std::size_t live_cell_count(const TimeGrid& time) { return time.n - 1; }

void require_window_fits(const TimeGrid& time, const SteklovParams& params,
                         const char* op_name) {
    if (params.k + 1 > time.n) {
        throw std::invalid_argument(std::string(op_name) + ": window of " +
                                    std::to_string(params.k) + " steps exceeds grid of " +
                                    std::to_string(time.n) + " points");
    }
}

} // namespace

SteklovParams SteklovParams::from_steps(std::size_t k, const TimeGrid& time) {
    if (k < 1) throw std::invalid_argument("SteklovParams: window must cover >= 1 step");
    return SteklovParams{k, static_cast<double>(k) * time.dt};
}

SteklovParams SteklovParams::from_seconds(double h, const TimeGrid& time) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("SteklovParams: h must be positive, got " +
                                    std::to_string(h));
    }
    const double ratio = h / time.dt;
    const auto k = static_cast<long long>(std::llround(ratio));
    if (k < 1 || std::abs(ratio - static_cast<double>(k)) > 1e-9) {
        throw std::invalid_argument(
            "SteklovParams: h = " + std::to_string(h) +
            " is not a positive integer multiple of dt = " + std::to_string(time.dt) +
            "; pick h = k*dt");
    }
    return from_steps(static_cast<std::size_t>(k), time);
}

TimeGrid ih_domain(const TimeGrid& time, const SteklovParams& params) {
    if (params.k >= time.n) {
        throw std::invalid_argument("ih_domain: window of " + std::to_string(params.k) +
                                    " steps leaves an empty domain on a grid of " +
                                    std::to_string(time.n) + " points");
    }
    return TimeGrid(time.t0, time.dt, time.n - params.k);
}

Field steklov_average(const Field& field, const SteklovParams& params) {
    require_window_fits(field.time, params, "steklov_average");
    const TimeGrid out_time = ih_domain(field.time, params);
    const std::size_t ns = field.spatial_count();
    const std::size_t n = field.time.n;
    const std::size_t k = params.k;
    const double inv_k = 1.0 / static_cast<double>(k);

    Field out{field.space, out_time, std::vector<double>(ns * out_time.n)};
    for (std::size_t s = 0; s < ns; ++s) {
        if (k == 1) {
            // One-sample windows are the identity; keep them bit-exact.
            for (std::size_t j = 0; j < out_time.n; ++j) out.at(s, j) = field.at(s, j);
            continue;
        }
        const PrefixSums prefix =
            build_prefix(field.values.data() + s * n, live_cell_count(field.time));
        for (std::size_t j = 0; j < out_time.n; ++j) {
            out.at(s, j) = prefix.window_sum(j, j + k) * inv_k;
        }
    }
    return out;
}

Field steklov_average_extended(const Field& field, const SteklovParams& params) {
    const std::size_t ns = field.spatial_count();
    const std::size_t n = field.time.n;
    const std::size_t k = params.k;
    const std::size_t live = live_cell_count(field.time);
    const double inv_k = 1.0 / static_cast<double>(k);

    Field out{field.space, field.time, std::vector<double>(ns * n)};
    for (std::size_t s = 0; s < ns; ++s) {
        if (k == 1) {
            for (std::size_t j = 0; j < live; ++j) out.at(s, j) = field.at(s, j);
            out.at(s, live) = 0.0;
            continue;
        }
        const PrefixSums prefix =
            build_prefix(field.values.data() + s * n, live);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t begin = std::min(j, live);
            const std::size_t end = std::min(j + k, live);
            out.at(s, j) = prefix.window_sum(begin, end) * inv_k;
        }
    }
    return out;
}

double pointwise_average(const Field& field, std::size_t spatial_flat, std::size_t t_index,
                         const SteklovParams& params) {
    if (spatial_flat >= field.spatial_count()) {
        throw std::invalid_argument("pointwise_average: spatial index out of range");
    }
    if (t_index >= field.time.n) {
        throw std::invalid_argument("pointwise_average: time index out of range");
    }
    const std::size_t n = field.time.n;
    const std::size_t live = live_cell_count(field.time);
    // Same accumulation as the field-level kernel, so the results agree
    // bit-for-bit.
    if (params.k == 1) {
        return t_index < live ? field.at(spatial_flat, t_index) : 0.0;
    }
    const PrefixSums prefix = build_prefix(field.values.data() + spatial_flat * n, live);
    const std::size_t begin = std::min(t_index, live);
    const std::size_t end = std::min(t_index + params.k, live);
    const double inv_k = 1.0 / static_cast<double>(params.k);
    return prefix.window_sum(begin, end) * inv_k;
}

Field steklov_time_derivative(const Field& field, const SteklovParams& params) {
    require_window_fits(field.time, params, "steklov_time_derivative");
    const TimeGrid out_time = ih_domain(field.time, params);
    const std::size_t ns = field.spatial_count();
    const std::size_t k = params.k;
    const double inv_h = 1.0 / params.h;

    Field out{field.space, out_time, std::vector<double>(ns * out_time.n)};
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t j = 0; j < out_time.n; ++j) {
            out.at(s, j) = (field.at(s, j + k) - field.at(s, j)) * inv_h;
        }
    }
    return out;
}

Field naive_average(const Field& field, const SteklovParams& params) {
    require_window_fits(field.time, params, "naive_average");
    const TimeGrid out_time = ih_domain(field.time, params);
    const std::size_t ns = field.spatial_count();
    const std::size_t k = params.k;

    Field out{field.space, out_time, std::vector<double>(ns * out_time.n)};
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t j = 0; j < out_time.n; ++j) {
            double sum = 0.0;
            for (std::size_t i = 0; i < k; ++i) sum += field.at(s, j + i);
            out.at(s, j) = sum / static_cast<double>(k);
        }
    }
    return out;
}

Field naive_average_extended(const Field& field, const SteklovParams& params) {
    const std::size_t ns = field.spatial_count();
    const std::size_t n = field.time.n;
    const std::size_t k = params.k;
    const std::size_t live = live_cell_count(field.time);

    Field out{field.space, field.time, std::vector<double>(ns * n)};
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t m = j + i;
                if (m < live) sum += field.at(s, m);
            }
            out.at(s, j) = sum / static_cast<double>(k);
        }
    }
    return out;
}

} // namespace steklov
