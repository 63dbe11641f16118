#include "steklov/norms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace steklov {

Exponent::Exponent(double value) : value_(value) {
    if (std::isnan(value_) || value_ < 1.0) {
        throw std::invalid_argument("Exponent: need a real >= 1 or inf, got " +
                                    std::to_string(value));
    }
}

std::string Exponent::str() const {
    if (is_inf()) return "inf";
    std::ostringstream out;
    out << value_;
    return out.str();
}

Exponent Exponent::parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return Exponent::inf();
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("Exponent: cannot parse '" + text + "'");
    }
    if (pos != text.size()) {
        throw std::invalid_argument("Exponent: cannot parse '" + text + "'");
    }
    return Exponent(v);
}

namespace {

double lq_norm_span(std::span<const double> values, double cell_volume, const Exponent& q) {
    if (q.is_inf()) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    const double p = q.value();
    double sum = 0.0;
    if (p == 1.0) {
        for (double v : values) sum += std::abs(v);
    } else if (p == 2.0) {
        for (double v : values) sum += v * v;
    } else {
        for (double v : values) sum += std::pow(std::abs(v), p);
    }
    return std::pow(sum * cell_volume, 1.0 / p);
}

} // namespace

double lq_space_norm(const Field& field, std::size_t t_index, const Exponent& q) {
    if (t_index >= field.time.n) {
        throw std::invalid_argument("lq_space_norm: time index out of range");
    }
    // Slice access is strided; gather once so the reduction is contiguous.
    const std::vector<double> slice = field.time_slice(t_index);
    return lq_norm_span(slice, field.space.cell_volume(), q);
}

double lq_space_norm(const SpaceSlice& slice, const Exponent& q) {
    return lq_norm_span(slice.values, slice.space.cell_volume(), q);
}

double bochner_norm(const Field& field, const BochnerSpec& spec) {
    if (spec.r.is_inf()) return ess_sup_time(field, spec.q);
    const double r = spec.r.value();
    double sum = 0.0;
    // Left-Riemann over I: the final grid point carries no weight.
    for (std::size_t j = 0; j + 1 < field.time.n; ++j) {
        sum += std::pow(lq_space_norm(field, j, spec.q), r) * field.time.dt;
    }
    return std::pow(sum, 1.0 / r);
}

double ess_sup_time(const Field& field, const Exponent& q) {
    double m = 0.0;
    for (std::size_t j = 0; j < field.time.n; ++j) {
        m = std::max(m, lq_space_norm(field, j, q));
    }
    return m;
}

double cumulative_norm_V(const Field& field, const BochnerSpec& spec, std::size_t t_index) {
    if (spec.r.is_inf()) {
        throw std::invalid_argument("cumulative_norm_V: requires r < inf");
    }
    if (t_index >= field.time.n) {
        throw std::invalid_argument("cumulative_norm_V: time index out of range");
    }
    const double r = spec.r.value();
    double sum = 0.0;
    for (std::size_t j = 0; j < t_index; ++j) {
        sum += std::pow(lq_space_norm(field, j, spec.q), r) * field.time.dt;
    }
    return sum;
}

} // namespace steklov
