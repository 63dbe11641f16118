#include "steklov/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steklov {

std::string to_string(SmoothnessClass c) {
    switch (c) {
        case SmoothnessClass::constant: return "constant";
        case SmoothnessClass::polynomial: return "polynomial";
        case SmoothnessClass::smooth_periodic: return "smooth-periodic";
        case SmoothnessClass::step: return "step";
        case SmoothnessClass::cantor: return "cantor";
        case SmoothnessClass::random_smooth: return "random-smooth";
    }
    return "unknown";
}

std::uint64_t SeededRng::next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SeededRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

double cantor_function(int level, double t) {
    if (level < 0 || level > 12) {
        throw std::invalid_argument("cantor_function: level must be in [0, 12]");
    }
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double value = 0.0;
    double scale = 1.0;
    for (int l = 0; l < level; ++l) {
        if (t < 1.0 / 3.0) {
            t *= 3.0;
        } else if (t <= 2.0 / 3.0) {
            return value + 0.5 * scale;
        } else {
            value += 0.5 * scale;
            t = 3.0 * t - 2.0;
        }
        scale *= 0.5;
    }
    return value + scale * t;  // remaining linear piece of the level-n approximant
}

SpaceGrid default_space_grid() { return SpaceGrid({65}, {1.0 / 64.0}, {0.0}); }

TimeGrid default_time_grid() { return TimeGrid(0.0, 1.0 / 256.0, 257); }

namespace {

Field restricted_oracle_field(const SpaceGrid& space, const TimeGrid& time,
                              const SteklovParams& params, const FieldSampler& averaged) {
    const TimeGrid domain = ih_domain(time, params);
    Field out{space, domain, std::vector<double>(space.point_count() * domain.n)};
    for (std::size_t s = 0; s < out.spatial_count(); ++s) {
        const std::vector<double> x = space.coords(s);
        for (std::size_t j = 0; j < domain.n; ++j) {
            out.at(s, j) = averaged(x, domain.point(j));
        }
    }
    return out;
}

double gauss_bump(double x, double center, double width) {
    const double u = (x - center) / width;
    return std::exp(-0.5 * u * u);
}

} // namespace

CorpusEntry entry_constant(double c, const SpaceGrid& space, const TimeGrid& time) {
    if (!std::isfinite(c)) throw std::invalid_argument("entry_constant: need a finite value");
    CorpusEntry entry;
    entry.name = "constant";
    entry.smoothness = SmoothnessClass::constant;
    entry.sampler = [c](std::span<const double>, double) { return c; };
    entry.field = make_field(space, time, entry.sampler);
    entry.oracle_average = [space, time, c](const SteklovParams& params) {
        return restricted_oracle_field(space, time, params,
                                       [c](std::span<const double>, double) { return c; });
    };
    entry.oracle_average_discrete = entry.oracle_average;
    entry.oracle_bochner = [space, time, c](const BochnerSpec& spec) {
        const double space_factor =
            spec.q.is_inf() ? 1.0
                            : std::pow(static_cast<double>(space.point_count()) *
                                           space.cell_volume(),
                                       1.0 / spec.q.value());
        const double time_factor =
            spec.r.is_inf() ? 1.0 : std::pow(time.length(), 1.0 / spec.r.value());
        return std::abs(c) * space_factor * time_factor;
    };
    return entry;
}

CorpusEntry entry_linear_t(const SpaceGrid& space, const TimeGrid& time) {
    CorpusEntry entry;
    entry.name = "linear-t";
    entry.smoothness = SmoothnessClass::polynomial;
    entry.sampler = [](std::span<const double>, double t) { return t; };
    entry.field = make_field(space, time, entry.sampler);
    // Continuous window mean of t is t + h/2; the discrete left-Riemann mean
    // is t + (h - dt)/2.
    entry.oracle_average = [space, time](const SteklovParams& params) {
        const double shift = 0.5 * params.h;
        return restricted_oracle_field(
            space, time, params,
            [shift](std::span<const double>, double t) { return t + shift; });
    };
    entry.oracle_average_discrete = [space, time](const SteklovParams& params) {
        const double shift = 0.5 * (params.h - time.dt);
        return restricted_oracle_field(
            space, time, params,
            [shift](std::span<const double>, double t) { return t + shift; });
    };
    return entry;
}

CorpusEntry entry_sin_gauss(double omega, const SpaceGrid& space, const TimeGrid& time) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("entry_sin_gauss: omega must be positive");
    }
    CorpusEntry entry;
    entry.name = space.ndim() == 1 ? "sin-gauss" : "sin-gauss-" + std::to_string(space.ndim()) + "d";
    entry.smoothness = SmoothnessClass::smooth_periodic;
    auto bump = [](std::span<const double> x) {
        double b = 1.0;
        for (double xi : x) b *= gauss_bump(xi, 0.5, 0.15);
        return b;
    };
    entry.sampler = [omega, bump](std::span<const double> x, double t) {
        return std::sin(omega * t) * bump(x);
    };
    entry.field = make_field(space, time, entry.sampler);
    entry.oracle_average = [space, time, omega, bump](const SteklovParams& params) {
        const double h = params.h;
        return restricted_oracle_field(
            space, time, params, [omega, bump, h](std::span<const double> x, double t) {
                const double factor =
                    (std::cos(omega * t) - std::cos(omega * (t + h))) / (omega * h);
                return factor * bump(x);
            });
    };
    return entry;
}

CorpusEntry entry_step(double t_jump, const SpaceGrid& space, const TimeGrid& time) {
    const double offset = (t_jump - time.t0) / time.dt;
    const double nearest = std::round(offset);
    if (!(t_jump > time.t0) || !(t_jump < time.end()) || std::abs(offset - nearest) > 1e-9) {
        throw std::invalid_argument("entry_step: t_jump must be an interior grid time");
    }
    CorpusEntry entry;
    entry.name = "step";
    entry.smoothness = SmoothnessClass::step;
    entry.discontinuity = t_jump;
    // Unit down-step, right continuous: the forward window at the jump sees
    // only the post-jump constant, and the zero tail keeps the extension
    // error localized at the ramp.
    entry.sampler = [t_jump](std::span<const double>, double t) {
        return t < t_jump ? 1.0 : 0.0;
    };
    entry.field = make_field(space, time, entry.sampler);
    entry.oracle_average = [space, time, t_jump](const SteklovParams& params) {
        const double h = params.h;
        return restricted_oracle_field(
            space, time, params, [t_jump, h](std::span<const double>, double t) {
                if (t + h <= t_jump) return 1.0;
                if (t >= t_jump) return 0.0;
                return (t_jump - t) / h;  // linear ramp of width h before the jump
            });
    };
    return entry;
}

CorpusEntry entry_cantor(int level, const SpaceGrid& space, const TimeGrid& time) {
    if (level < 1 || level > 12) {
        throw std::invalid_argument("entry_cantor: level must be in [1, 12]");
    }
    const double span = time.length();
    const double t0 = time.t0;
    CorpusEntry entry;
    entry.name = "cantor-" + std::to_string(level);
    entry.smoothness = SmoothnessClass::cantor;
    entry.sampler = [level, t0, span](std::span<const double>, double t) {
        return cantor_function(level, (t - t0) / span);
    };
    entry.field = make_field(space, time, entry.sampler);
    return entry;
}

FieldSampler random_smooth_sampler(std::uint64_t seed, int modes, std::size_t ndim) {
    if (modes < 1) throw std::invalid_argument("random_smooth_sampler: modes must be >= 1");
    if (ndim < 1 || ndim > 3) {
        throw std::invalid_argument("random_smooth_sampler: ndim must be 1, 2 or 3");
    }
    SeededRng rng(seed);

    struct Mode {
        double cos_amp;
        double sin_amp;
        std::vector<double> centers;
        std::vector<double> widths;
    };
    const double dc = rng.next_in(0.6, 1.0);
    std::vector<double> dc_centers(ndim);
    std::vector<double> dc_widths(ndim);
    for (std::size_t a = 0; a < ndim; ++a) {
        dc_centers[a] = rng.next_in(0.35, 0.65);
        dc_widths[a] = rng.next_in(0.15, 0.3);
    }
    std::vector<Mode> spectrum(static_cast<std::size_t>(modes));
    for (int m = 0; m < modes; ++m) {
        Mode& mode = spectrum[static_cast<std::size_t>(m)];
        const double fall = 1.0 / static_cast<double>((m + 1) * (m + 1));
        mode.cos_amp = rng.next_in(-0.5, 0.5) * fall;
        mode.sin_amp = rng.next_in(-0.5, 0.5) * fall;
        mode.centers.resize(ndim);
        mode.widths.resize(ndim);
        for (std::size_t a = 0; a < ndim; ++a) {
            mode.centers[a] = rng.next_in(0.35, 0.65);
            mode.widths[a] = rng.next_in(0.15, 0.3);
        }
    }

    return [dc, dc_centers, dc_widths, spectrum](std::span<const double> x, double t) {
        double bump = 1.0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            bump *= gauss_bump(x[a], dc_centers[a], dc_widths[a]);
        }
        double v = dc * bump;
        for (std::size_t m = 0; m < spectrum.size(); ++m) {
            const Mode& mode = spectrum[m];
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(m + 1) * t;
            double b = 1.0;
            for (std::size_t a = 0; a < x.size(); ++a) {
                b *= gauss_bump(x[a], mode.centers[a], mode.widths[a]);
            }
            v += (mode.cos_amp * std::cos(angle) + mode.sin_amp * std::sin(angle)) * b;
        }
        return v;
    };
}

CorpusEntry entry_random_smooth(std::uint64_t seed, int modes, const SpaceGrid& space,
                                const TimeGrid& time) {
    CorpusEntry entry;
    entry.name = "random-smooth-" + std::to_string(seed);
    entry.smoothness = SmoothnessClass::random_smooth;
    entry.sampler = random_smooth_sampler(seed, modes, space.ndim());
    entry.field = make_field(space, time, entry.sampler);
    return entry;
}

std::vector<CorpusEntry> standard_suite() {
    return standard_suite(default_space_grid(), default_time_grid());
}

std::vector<CorpusEntry> standard_suite(const SpaceGrid& space, const TimeGrid& time) {
    std::vector<CorpusEntry> suite;
    suite.push_back(entry_constant(3.0, space, time));
    suite.push_back(entry_linear_t(space, time));
    suite.push_back(entry_sin_gauss(2.0 * std::numbers::pi, space, time));
    suite.push_back(entry_step(0.5, space, time));
    suite.push_back(entry_cantor(8, space, time));
    suite.push_back(entry_random_smooth(20240801ull, 4, space, time));

    // 2-D smoke entry: same time resolution, coarse plane.
    const SpaceGrid plane({33, 33}, {1.0 / 32.0, 1.0 / 32.0}, {0.0, 0.0});
    suite.push_back(entry_sin_gauss(2.0 * std::numbers::pi, plane, time));
    suite.back().name = "sin-gauss-2d";

    return suite;
}

} // namespace steklov
