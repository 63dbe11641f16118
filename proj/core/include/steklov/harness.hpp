#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "steklov/verify.hpp"

namespace steklov {

/// One unit of verification work.  Jobs are pure functions of immutable
/// inputs; the runner may execute them on any worker, and results are
/// assembled in job order so reports do not depend on scheduling.
struct CheckJob {
    std::string check_id;
    std::function<std::vector<CheckResult>()> run;
};

struct SweepOverrides {
    std::vector<std::string> lemmas;  // keep only checks whose id matches
    std::optional<double> h;          // replace the window sweep
    std::optional<Exponent> q;
    std::optional<Exponent> r;
    std::optional<double> dt;         // rebuild the suite on a finer time grid
};

/// Time grid on [0, 1] with the requested step; 1/dt must be an even integer
/// >= 128 so that every window sweep and the declared jump stay on-grid.
TimeGrid time_grid_from_dt(double dt);

/// The full verification plan over the standard suite plus `random_fields`
/// seeded random entries: inequality and identity sweeps, convergence
/// studies, the Cantor demonstration and the kernel oracle.
std::vector<CheckJob> standard_jobs(std::uint64_t seed, const SweepOverrides& overrides,
                                    std::size_t random_fields = 100);

/// Convergence studies only (uniform, L^r, pointwise, integration by parts).
std::vector<CheckJob> study_jobs(std::uint64_t seed, const SweepOverrides& overrides);

/// Runs jobs on `jobs` workers and returns the results in job order.
std::vector<CheckResult> run_jobs(const std::vector<CheckJob>& plan, std::size_t jobs);

/// True when the id matches one of the lemma selectors ("4.1" matches
/// "lemma-4.1-commutation"; "kernel" matches the kernel oracle).
bool matches_lemma(const std::string& check_id, const std::vector<std::string>& lemmas);

} // namespace steklov
