#include "steklov/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace steklov {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Norm of the difference of two time slices without materializing a field.
double lq_diff_norm(std::span<const double> a, std::span<const double> b, double cell_volume,
                    const Exponent& q) {
    if (q.is_inf()) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    }
    const double p = q.value();
    double sum = 0.0;
    if (p == 1.0) {
        for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    } else if (p == 2.0) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            sum += d * d;
        }
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) sum += std::pow(std::abs(a[i] - b[i]), p);
    }
    return std::pow(sum * cell_volume, 1.0 / p);
}

double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    }
    return m;
}

CheckResult inequality_result(std::string id, std::string field_name,
                              std::map<std::string, double> params, double measured,
                              double bound, double tolerance) {
    CheckResult r;
    r.check_id = std::move(id);
    r.field_name = std::move(field_name);
    r.parameters = std::move(params);
    r.measured = measured;
    r.bound_or_target = bound;
    r.tolerance = tolerance;
    r.margin = bound - measured;
    r.passed = r.margin >= -tolerance;
    return r;
}

CheckResult identity_result(std::string id, std::string field_name,
                            std::map<std::string, double> params, double measured,
                            double target, double tolerance) {
    CheckResult r;
    r.check_id = std::move(id);
    r.field_name = std::move(field_name);
    r.parameters = std::move(params);
    r.measured = measured;
    r.bound_or_target = target;
    r.tolerance = tolerance;
    r.margin = -std::abs(measured - target);
    r.passed = r.margin >= -tolerance;
    return r;
}

std::map<std::string, double> sweep_params(const CorpusEntry& entry,
                                           const SteklovParams& params) {
    return {{"h", params.h},
            {"k", static_cast<double>(params.k)},
            {"dt", entry.field.time.dt}};
}

constexpr double kExactRel = 1e-12;

bool is_smooth_class(SmoothnessClass c) {
    return c == SmoothnessClass::polynomial || c == SmoothnessClass::smooth_periodic ||
           c == SmoothnessClass::random_smooth;
}

std::vector<double> window_lengths(const TimeGrid& time, const std::vector<std::size_t>& k_list) {
    std::vector<double> hs;
    hs.reserve(k_list.size());
    for (std::size_t k : k_list) hs.push_back(static_cast<double>(k) * time.dt);
    return hs;
}

void require_study_sizes(const std::vector<std::size_t>& k_list, const char* op_name) {
    if (k_list.size() < 3) {
        throw std::invalid_argument(std::string(op_name) + ": need at least 3 window sizes");
    }
    for (std::size_t i = 1; i < k_list.size(); ++i) {
        if (k_list[i] >= k_list[i - 1]) {
            throw std::invalid_argument(std::string(op_name) +
                                        ": window sizes must be strictly decreasing");
        }
    }
}

bool monotone_ish(const std::vector<double>& errors, double floor) {
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i] > errors[i - 1] * 1.05 + floor) return false;
    }
    return true;
}

} // namespace

double estimate_order(const std::vector<double>& xs, const std::vector<double>& errors,
                      double scale) {
    if (xs.size() != errors.size()) {
        throw std::invalid_argument("estimate_order: list lengths disagree");
    }
    if (xs.size() < 3) {
        throw std::invalid_argument("estimate_order: need at least 3 points");
    }
    double max_err = 0.0;
    for (double e : errors) {
        if (e < 0.0 || !std::isfinite(e)) {
            throw std::invalid_argument("estimate_order: errors must be finite and nonnegative");
        }
        max_err = std::max(max_err, e);
    }
    const double floor = 1e-13 * (scale > 0.0 ? scale : max_err);

    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0)) {
            throw std::invalid_argument("estimate_order: x values must be positive");
        }
        if (errors[i] > floor) {
            lx.push_back(std::log(xs[i]));
            ly.push_back(std::log(errors[i]));
        }
    }
    if (lx.size() < 3) {
        throw std::invalid_argument("estimate_order: too few usable points above the floor");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(lx.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    return sxy / sxx;
}

CheckResult check_contraction(const CorpusEntry& entry, const BochnerSpec& spec,
                              const SteklovParams& params) {
    const auto start = Clock::now();
    const Field averaged = steklov_average_extended(entry.field, params);
    const double measured = bochner_norm(averaged, spec);
    const double bound = bochner_norm(entry.field, spec);

    auto p = sweep_params(entry, params);
    p["q"] = spec.q.value();
    p["r"] = spec.r.value();
    CheckResult r = inequality_result("lemma-2.4d-contraction", entry.name, std::move(p),
                                      measured, bound, kExactRel * bound);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_pointwise_bound(const CorpusEntry& entry, const BochnerSpec& spec,
                                  const SteklovParams& params) {
    const auto start = Clock::now();
    const Field averaged = steklov_average_extended(entry.field, params);
    double measured = 0.0;
    for (std::size_t j = 0; j < averaged.time.n; ++j) {
        measured = std::max(measured, lq_space_norm(averaged, j, spec.q));
    }
    const double bound = spec.r.is_inf()
                             ? ess_sup_time(entry.field, spec.q)
                             : std::pow(params.h, -1.0 / spec.r.value()) *
                                   bochner_norm(entry.field, spec);

    auto p = sweep_params(entry, params);
    p["q"] = spec.q.value();
    p["r"] = spec.r.value();
    CheckResult r = inequality_result("lemma-2.4a-pointwise-bound", entry.name, std::move(p),
                                      measured, bound, kExactRel * bound);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_lipschitz(const CorpusEntry& entry, const Exponent& q,
                            const SteklovParams& params) {
    const auto start = Clock::now();
    const Field averaged = steklov_average(entry.field, params);
    const double sup_norm = ess_sup_time(entry.field, q);
    const double bound = 2.0 * sup_norm / params.h;

    const std::size_t count = averaged.time.n;
    std::vector<std::vector<double>> slices(count);
    for (std::size_t j = 0; j < count; ++j) slices[j] = averaged.time_slice(j);

    const double cell_volume = averaged.space.cell_volume();
    double measured = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const double gap = static_cast<double>(j - i) * averaged.time.dt;
            const double diff = lq_diff_norm(slices[i], slices[j], cell_volume, q);
            measured = std::max(measured, diff / gap);
        }
    }

    auto p = sweep_params(entry, params);
    p["q"] = q.value();
    CheckResult r = inequality_result("lemma-2.2-lipschitz", entry.name, std::move(p), measured,
                                      bound, kExactRel * bound);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_uniform_convergence(const CorpusEntry& entry, const Exponent& q,
                                      const std::vector<std::size_t>& k_list) {
    require_study_sizes(k_list, "check_uniform_convergence");
    const auto start = Clock::now();
    const Field& field = entry.field;
    const std::size_t k_max = k_list.front();
    if (k_max + 1 > field.time.n) {
        throw std::invalid_argument("check_uniform_convergence: largest window exceeds grid");
    }
    // Fixed region [a, T] with T = end - max(h): every window in the sweep is
    // defined there without extension.
    const std::size_t scan_end = field.time.n - k_max;  // exclusive
    const double cell_volume = field.space.cell_volume();

    std::vector<double> errors;
    errors.reserve(k_list.size());
    for (std::size_t k : k_list) {
        const Field averaged = steklov_average(field, SteklovParams::from_steps(k, field.time));
        double err = 0.0;
        for (std::size_t j = 0; j < scan_end; ++j) {
            err = std::max(err, lq_diff_norm(averaged.time_slice(j), field.time_slice(j),
                                             cell_volume, q));
        }
        errors.push_back(err);
    }

    const std::vector<double> hs = window_lengths(field.time, k_list);
    const double scale = field.max_abs();
    const double floor = 1e-13 * scale;

    ConvergenceStudy study;
    study.xs = hs;
    study.errors = errors;

    CheckResult r;
    const double max_err = *std::max_element(errors.begin(), errors.end());
    if (is_smooth_class(entry.smoothness)) {
        study.order_target = 1.0;
        study.order_window = 0.1;
        if (max_err <= floor) {
            study.fitted_order = 0.0;
            r = identity_result("lemma-2.2-uniform-convergence", entry.name, {{"q", q.value()}},
                                0.0, 0.0, study.order_window);
        } else {
            study.fitted_order = estimate_order(hs, errors, scale);
            r = identity_result("lemma-2.2-uniform-convergence", entry.name, {{"q", q.value()}},
                                study.fitted_order, study.order_target, study.order_window);
        }
    } else {
        // No rate is claimed for non-smooth classes; require only decay.
        if (max_err > floor) {
            study.fitted_order = estimate_order(hs, errors, scale);
        }
        const bool ok = monotone_ish(errors, floor);
        r = identity_result("lemma-2.2-uniform-convergence", entry.name, {{"q", q.value()}},
                            ok ? 0.0 : 1.0, 0.0, 0.0);
    }
    r.parameters["dt"] = field.time.dt;
    r.study = std::move(study);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_lr_convergence(const CorpusEntry& entry, const BochnerSpec& spec,
                                 const std::vector<std::size_t>& k_list) {
    if (spec.r.is_inf()) {
        throw std::invalid_argument("check_lr_convergence: requires r < inf");
    }
    require_study_sizes(k_list, "check_lr_convergence");
    const auto start = Clock::now();
    const Field& field = entry.field;

    std::vector<double> errors;
    errors.reserve(k_list.size());
    for (std::size_t k : k_list) {
        const Field averaged =
            steklov_average_extended(field, SteklovParams::from_steps(k, field.time));
        Field diff = averaged;
        for (std::size_t i = 0; i < diff.values.size(); ++i) {
            diff.values[i] -= field.values[i];
        }
        errors.push_back(bochner_norm(diff, spec));
    }

    const std::vector<double> hs = window_lengths(field.time, k_list);
    const double scale = field.max_abs();
    const double floor = 1e-13 * scale;
    const double max_err = *std::max_element(errors.begin(), errors.end());

    ConvergenceStudy study;
    study.xs = hs;
    study.errors = errors;

    std::map<std::string, double> p{
        {"q", spec.q.value()}, {"r", spec.r.value()}, {"dt", field.time.dt}};

    CheckResult r;
    if (entry.smoothness == SmoothnessClass::step) {
        // The jump contributes |jump|^r * h to the r-th power integral.
        study.order_target = 1.0 / spec.r.value();
        study.order_window = 0.15;
        study.fitted_order = estimate_order(hs, errors, scale);
        r = identity_result("lemma-2.5a-lr-convergence", entry.name, std::move(p),
                            study.fitted_order, study.order_target, study.order_window);
    } else if (is_smooth_class(entry.smoothness) && max_err > floor) {
        study.order_target = 1.0;
        study.order_window = 0.25;
        study.fitted_order = estimate_order(hs, errors, scale);
        r = identity_result("lemma-2.5a-lr-convergence", entry.name, std::move(p),
                            study.fitted_order, study.order_target, study.order_window);
    } else {
        if (max_err > floor) study.fitted_order = estimate_order(hs, errors, scale);
        const bool ok = monotone_ish(errors, floor);
        r = identity_result("lemma-2.5a-lr-convergence", entry.name, std::move(p),
                            ok ? 0.0 : 1.0, 0.0, 0.0);
    }
    r.study = std::move(study);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_ae_convergence(const CorpusEntry& entry, const Exponent& q,
                                 const std::vector<std::size_t>& k_list) {
    require_study_sizes(k_list, "check_ae_convergence");
    const auto start = Clock::now();
    const Field& field = entry.field;
    const std::size_t k_max = k_list.front();
    if (k_max + 1 > field.time.n) {
        throw std::invalid_argument("check_ae_convergence: largest window exceeds grid");
    }
    const std::size_t scan_end = field.time.n - k_max;  // windows stay inside I
    const double cell_volume = field.space.cell_volume();

    std::vector<Field> averaged;
    averaged.reserve(k_list.size());
    for (std::size_t k : k_list) {
        averaged.push_back(
            steklov_average_extended(field, SteklovParams::from_steps(k, field.time)));
    }

    const double floor = 1e-12 * ess_sup_time(field, q);

    // A grid point converges when its error either reaches the floating-point
    // floor or has dropped to under half of its peak across the sweep.
    std::vector<std::size_t> exceptional;
    std::vector<double> worst_per_h(k_list.size(), 0.0);
    for (std::size_t j = 0; j < scan_end; ++j) {
        const std::vector<double> reference = field.time_slice(j);
        double peak = 0.0;
        double last = 0.0;
        for (std::size_t i = 0; i < k_list.size(); ++i) {
            const double err =
                lq_diff_norm(averaged[i].time_slice(j), reference, cell_volume, q);
            peak = std::max(peak, err);
            last = err;
            worst_per_h[i] = std::max(worst_per_h[i], err);
        }
        const bool converged = last <= std::max(floor, 0.5 * peak);
        if (!converged) exceptional.push_back(j);
    }

    // Allowed exceptional region: strictly within max(h) left of a declared
    // jump.
    std::size_t outside_allowed = 0;
    const double h_max = static_cast<double>(k_max) * field.time.dt;
    for (std::size_t j : exceptional) {
        bool allowed = false;
        if (entry.discontinuity) {
            const double t = field.time.point(j);
            allowed = t > *entry.discontinuity - h_max && t < *entry.discontinuity;
        }
        if (!allowed) ++outside_allowed;
    }

    ConvergenceStudy study;
    study.xs = window_lengths(field.time, k_list);
    study.errors = worst_per_h;

    CheckResult r = identity_result("lemma-2.6-ae-convergence", entry.name,
                                    {{"q", q.value()}, {"dt", field.time.dt}},
                                    static_cast<double>(outside_allowed), 0.0, 0.0);
    r.study = std::move(study);
    r.exceptional_indices = std::move(exceptional);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_commutation(const CorpusEntry& entry, const SteklovParams& params,
                              std::size_t axis) {
    const auto start = Clock::now();
    const Field derivative = weak_derivative(entry.field, axis);
    const Field avg_then_diff = weak_derivative(steklov_average(entry.field, params), axis);
    const Field diff_then_avg = steklov_average(derivative, params);
    const double measured = max_abs_diff(avg_then_diff, diff_then_avg);
    const double scale = derivative.max_abs();

    auto p = sweep_params(entry, params);
    p["axis"] = static_cast<double>(axis);
    CheckResult r = identity_result("lemma-4.1-commutation", entry.name, std::move(p), measured,
                                    0.0, kExactRel * scale);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_time_derivative(const CorpusEntry& entry, const SteklovParams& params) {
    const auto start = Clock::now();
    const Field averaged = steklov_average(entry.field, params);
    const Field derivative = steklov_time_derivative(entry.field, params);

    double measured = 0.0;
    const std::size_t ns = averaged.spatial_count();
    const double inv_dt = 1.0 / averaged.time.dt;
    for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t j = 0; j + 1 < averaged.time.n; ++j) {
            const double forward = (averaged.at(s, j + 1) - averaged.at(s, j)) * inv_dt;
            measured = std::max(measured, std::abs(forward - derivative.at(s, j)));
        }
    }
    const double scale = std::max(derivative.max_abs(), entry.field.max_abs());

    CheckResult r = identity_result("lemma-4.2b-time-derivative", entry.name,
                                    sweep_params(entry, params), measured, 0.0,
                                    kExactRel * scale);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_ftc_derivative(const CorpusEntry& entry) {
    const auto start = Clock::now();
    const Field& f = entry.field;
    const SpaceSlice base{f.space, f.time_slice(0)};
    const Field F = cumulative_integral(f, base, 0);

    double measured = 0.0;
    const double inv_dt = 1.0 / f.time.dt;
    for (std::size_t s = 0; s < f.spatial_count(); ++s) {
        for (std::size_t j = 0; j + 1 < f.time.n; ++j) {
            const double forward = (F.at(s, j + 1) - F.at(s, j)) * inv_dt;
            measured = std::max(measured, std::abs(forward - f.at(s, j)));
        }
    }
    const double scale = std::max(f.max_abs(), F.max_abs());
    CheckResult r = identity_result("lemma-5.1a-ftc-derivative", entry.name,
                                    {{"dt", f.time.dt}}, measured, 0.0, kExactRel * scale);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_ftc_interval(const CorpusEntry& entry) {
    const auto start = Clock::now();
    const Field& f = entry.field;
    const SpaceSlice base{f.space, f.time_slice(0)};
    const Field F = cumulative_integral(f, base, 0);

    const std::size_t j1 = f.time.n / 4;
    const std::size_t j2 = (3 * f.time.n) / 4;
    const SpaceSlice direct = integrate_time(f, j1, j2);

    double measured = 0.0;
    for (std::size_t s = 0; s < f.spatial_count(); ++s) {
        const double via_antiderivative = F.at(s, j2) - F.at(s, j1);
        measured = std::max(measured, std::abs(direct.values[s] - via_antiderivative));
    }
    const double scale = std::max(f.max_abs(), F.max_abs());
    CheckResult r = identity_result(
        "lemma-5.2b-ftc-interval", entry.name,
        {{"dt", f.time.dt}, {"j1", static_cast<double>(j1)}, {"j2", static_cast<double>(j2)}},
        measured, 0.0, kExactRel * scale);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_pointwise_values(const CorpusEntry& entry, const SteklovParams& params) {
    const auto start = Clock::now();
    const Field averaged = steklov_average_extended(entry.field, params);
    double measured = 0.0;
    for (std::size_t s = 0; s < entry.field.spatial_count(); ++s) {
        for (std::size_t j = 0; j < entry.field.time.n; ++j) {
            const double scalar = pointwise_average(entry.field, s, j, params);
            measured = std::max(measured, std::abs(scalar - averaged.at(s, j)));
        }
    }
    // Both paths share one accumulation routine, so agreement is bitwise.
    CheckResult r = identity_result("lemma-3.1c-pointwise-values", entry.name,
                                    sweep_params(entry, params), measured, 0.0, 0.0);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_kernel_oracle(const CorpusEntry& entry, const SteklovParams& params) {
    const auto start = Clock::now();
    const double restricted =
        max_abs_diff(steklov_average(entry.field, params), naive_average(entry.field, params));
    const double extended = max_abs_diff(steklov_average_extended(entry.field, params),
                                         naive_average_extended(entry.field, params));
    const double measured = std::max(restricted, extended);
    const double scale = entry.field.max_abs();
    CheckResult r = identity_result("kernel-prefix-vs-naive", entry.name,
                                    sweep_params(entry, params), measured, 0.0,
                                    kExactRel * scale);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

namespace {

struct IbpLevel {
    Field f;
    Field g;
    SpaceSlice F0;
    SpaceSlice G1;
    std::size_t a_index;
    std::size_t b_index;
};

IbpLevel build_ibp_level(const IbpInputs& inputs, double dt) {
    const double span = inputs.t_end - inputs.t_begin;
    const double steps = span / dt;
    const auto n_steps = static_cast<long long>(std::llround(steps));
    if (n_steps < 2 || std::abs(steps - static_cast<double>(n_steps)) > 1e-9) {
        throw std::invalid_argument("ibp study: dt must divide the interval");
    }
    const TimeGrid time(inputs.t_begin, dt, static_cast<std::size_t>(n_steps) + 1);
    IbpLevel level{make_field(inputs.space, time, inputs.f),
                   make_field(inputs.space, time, inputs.g),
                   SpaceSlice{inputs.space, std::vector<double>(inputs.space.point_count(), 0.0)},
                   SpaceSlice{inputs.space, std::vector<double>(inputs.space.point_count(), 0.0)},
                   0, time.n - 1};
    return level;
}

} // namespace

CheckResult check_ibp_convergence(const IbpInputs& inputs, const std::vector<double>& dt_list) {
    if (dt_list.size() < 3) {
        throw std::invalid_argument("check_ibp_convergence: need at least 3 dt values");
    }
    const auto start = Clock::now();
    std::vector<double> errors;
    errors.reserve(dt_list.size());
    double scale = 0.0;
    for (double dt : dt_list) {
        const IbpLevel level = build_ibp_level(inputs, dt);
        const SpaceSlice residual =
            integration_by_parts_residual(level.f, level.g, level.F0, level.G1, 0, 0,
                                          level.a_index, level.b_index);
        errors.push_back(residual.max_abs());
        scale = std::max(scale, std::max(level.f.max_abs(), level.g.max_abs()));
    }

    ConvergenceStudy study;
    study.xs = dt_list;
    study.errors = errors;
    study.order_target = 1.0;
    study.order_window = 0.2;
    study.fitted_order = estimate_order(dt_list, errors, scale);

    CheckResult r = identity_result("lemma-5.3b-integration-by-parts", inputs.name, {},
                                    study.fitted_order, study.order_target, study.order_window);
    r.study = std::move(study);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_abel_identity(const IbpInputs& inputs, double dt) {
    const auto start = Clock::now();
    const IbpLevel level = build_ibp_level(inputs, dt);
    const SpaceSlice residual = abel_identity_residual(level.f, level.g, level.F0, level.G1, 0,
                                                       0, level.a_index, level.b_index);
    const Field F = cumulative_integral(level.f, level.F0, 0);
    const Field G = cumulative_integral(level.g, level.G1, 0);
    const double scale = std::max(F.max_abs() * G.max_abs(), 1e-300);

    CheckResult r = identity_result("lemma-5.3b-abel-identity", inputs.name, {{"dt", dt}},
                                    residual.max_abs(), 0.0, kExactRel * scale);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_cantor_counterexample(int level, const SpaceGrid& space,
                                        const TimeGrid& time) {
    const auto start = Clock::now();
    const CorpusEntry cantor = entry_cantor(level, space, time);
    const Field zero = make_field(space, time, [](std::span<const double>, double) {
        return 0.0;
    });

    const SpaceSlice integral = integrate_time(zero, 0, time.n - 1);
    double measured = 0.0;
    for (std::size_t s = 0; s < space.point_count(); ++s) {
        const double endpoint_diff = cantor.field.at(s, time.n - 1) - cantor.field.at(s, 0);
        measured = std::max(measured, std::abs(integral.values[s] - endpoint_diff));
    }

    // The identity fails without absolute continuity; the demonstration
    // passes when the discrepancy is essentially the full endpoint gap.
    CheckResult r = inequality_result("lemma-5.2c-cantor-counterexample", cantor.name,
                                      {{"level", static_cast<double>(level)}}, measured, 0.99,
                                      0.0);
    r.margin = measured - 0.99;
    r.passed = r.margin >= 0.0;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

CheckResult check_cantor_restored(int level, const SpaceGrid& space, const TimeGrid& time) {
    const auto start = Clock::now();
    const CorpusEntry cantor = entry_cantor(level, space, time);

    // f = forward difference of G restores absolute continuity discretely.
    Field f{space, time, std::vector<double>(space.point_count() * time.n, 0.0)};
    const double inv_dt = 1.0 / time.dt;
    for (std::size_t s = 0; s < space.point_count(); ++s) {
        for (std::size_t j = 0; j + 1 < time.n; ++j) {
            f.at(s, j) = (cantor.field.at(s, j + 1) - cantor.field.at(s, j)) * inv_dt;
        }
    }

    const SpaceSlice integral = integrate_time(f, 0, time.n - 1);
    double measured = 0.0;
    for (std::size_t s = 0; s < space.point_count(); ++s) {
        const double endpoint_diff = cantor.field.at(s, time.n - 1) - cantor.field.at(s, 0);
        measured = std::max(measured, std::abs(integral.values[s] - endpoint_diff));
    }

    CheckResult r = identity_result("lemma-5.2c-cantor-restored", cantor.name,
                                    {{"level", static_cast<double>(level)}}, measured, 0.0,
                                    1e-12);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

} // namespace steklov
