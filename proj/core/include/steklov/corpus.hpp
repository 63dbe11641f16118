#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "steklov/field.hpp"
#include "steklov/norms.hpp"
#include "steklov/steklov.hpp"

namespace steklov {

enum class SmoothnessClass {
    constant,
    polynomial,
    smooth_periodic,
    step,
    cantor,
    random_smooth,
};

std::string to_string(SmoothnessClass c);

/// Analytic test field with closed-form ground truth where available.
/// The sampler is kept so checks can re-sample the same function on refined
/// grids (convergence studies in dt and dx).
struct CorpusEntry {
    std::string name;
    SmoothnessClass smoothness = SmoothnessClass::constant;
    Field field;
    FieldSampler sampler;

    /// Continuous-in-time window mean on the restricted domain I_h, where no
    /// extension is involved.  Empty when no closed form exists.
    std::function<Field(const SteklovParams&)> oracle_average;
    /// Exact value of the discrete restricted operator on I_h, when known.
    std::function<Field(const SteklovParams&)> oracle_average_discrete;
    /// Closed-form Bochner norm, when known.
    std::function<double(const BochnerSpec&)> oracle_bochner;

    /// Grid time of the declared jump for step entries.
    std::optional<double> discontinuity;
};

// Deterministic corpus constructors.  Identical parameters always produce
// bit-identical fields.
CorpusEntry entry_constant(double c, const SpaceGrid& space, const TimeGrid& time);
CorpusEntry entry_linear_t(const SpaceGrid& space, const TimeGrid& time);
CorpusEntry entry_sin_gauss(double omega, const SpaceGrid& space, const TimeGrid& time);
/// Unit down-step: v = 1 for t < t_jump, 0 for t >= t_jump (right-continuous).
/// t_jump must be a grid time.
CorpusEntry entry_step(double t_jump, const SpaceGrid& space, const TimeGrid& time);
/// Space-constant level-`level` piecewise-linear approximation of the
/// Cantor-Lebesgue function in t (level <= 12).
CorpusEntry entry_cantor(int level, const SpaceGrid& space, const TimeGrid& time);
/// Truncated Fourier series in t with Gaussian-bump spatial profiles;
/// coefficients from the seeded generator below.  modes >= 1.
CorpusEntry entry_random_smooth(std::uint64_t seed, int modes,
                                const SpaceGrid& space, const TimeGrid& time);

/// The sampler behind entry_random_smooth, usable on any grids of the given
/// spatial dimension.
FieldSampler random_smooth_sampler(std::uint64_t seed, int modes, std::size_t ndim);

/// Default grids: 257 time points on [0,1], 65 spatial points on [0,1].
SpaceGrid default_space_grid();
TimeGrid default_time_grid();

/// Deterministic suite covering every smoothness class on the default grids,
/// plus one 2-D smoke entry.
std::vector<CorpusEntry> standard_suite();

/// Same suite sampled on caller-supplied grids.  The time grid must contain
/// the jump time 0.5 of the step entry.
std::vector<CorpusEntry> standard_suite(const SpaceGrid& space, const TimeGrid& time);

/// Level-`level` Cantor-Lebesgue approximation evaluated at t in [0,1].
double cantor_function(int level, double t);

/// Splitmix64 stream; used instead of <random> distributions so that fields
/// are bit-identical across platforms.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_unit();                      // [0, 1)
    double next_in(double lo, double hi);    // [lo, hi)
  private:
    std::uint64_t state_;
};

} // namespace steklov
