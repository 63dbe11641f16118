#include "steklov/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

namespace steklov {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SeededRng rng(seed + 0x9e3779b97f4a7c15ull * (index + 1));
    return rng.next_u64();
}

std::vector<std::size_t> single_window_ks(const TimeGrid& time, const SweepOverrides& overrides) {
    if (overrides.h) {
        return {SteklovParams::from_seconds(*overrides.h, time).k};
    }
    return {1, 8, 64};
}

std::vector<Exponent> exponent_sweep(const std::optional<Exponent>& override_value) {
    if (override_value) return {*override_value};
    return {Exponent(1.0), Exponent(2.0), Exponent::inf()};
}

// Window sweep for the convergence studies: h halved from 64*dt, five levels.
const std::vector<std::size_t> kStudyWindows = {64, 32, 16, 8, 4};

using EntryList = std::shared_ptr<const std::vector<CorpusEntry>>;

void append_entry_jobs(std::vector<CheckJob>& plan, const EntryList& entries,
                       std::size_t index, const SweepOverrides& overrides,
                       bool include_expensive) {
    const CorpusEntry& entry = (*entries)[index];
    const TimeGrid& time = entry.field.time;
    const std::vector<std::size_t> ks = single_window_ks(time, overrides);
    const std::vector<Exponent> qs = exponent_sweep(overrides.q);
    const std::vector<Exponent> rs = exponent_sweep(overrides.r);

    for (std::size_t k : ks) {
        plan.push_back({"lemma-2.4d-contraction", [entries, index, k, qs, rs] {
                            const CorpusEntry& e = (*entries)[index];
                            const auto params = SteklovParams::from_steps(k, e.field.time);
                            std::vector<CheckResult> out;
                            for (const Exponent& q : qs) {
                                for (const Exponent& r : rs) {
                                    out.push_back(
                                        check_contraction(e, BochnerSpec{q, r}, params));
                                }
                            }
                            return out;
                        }});
        plan.push_back({"lemma-2.4a-pointwise-bound", [entries, index, k, qs, rs] {
                            const CorpusEntry& e = (*entries)[index];
                            const auto params = SteklovParams::from_steps(k, e.field.time);
                            std::vector<CheckResult> out;
                            for (const Exponent& q : qs) {
                                for (const Exponent& r : rs) {
                                    out.push_back(
                                        check_pointwise_bound(e, BochnerSpec{q, r}, params));
                                }
                            }
                            return out;
                        }});
        plan.push_back({"lemma-4.2b-time-derivative", [entries, index, k] {
                            const CorpusEntry& e = (*entries)[index];
                            const auto params = SteklovParams::from_steps(k, e.field.time);
                            return std::vector<CheckResult>{check_time_derivative(e, params)};
                        }});
        if (include_expensive) {
            plan.push_back({"lemma-2.2-lipschitz", [entries, index, k, qs] {
                                const CorpusEntry& e = (*entries)[index];
                                const auto params = SteklovParams::from_steps(k, e.field.time);
                                std::vector<CheckResult> out;
                                for (const Exponent& q : qs) {
                                    out.push_back(check_lipschitz(e, q, params));
                                }
                                return out;
                            }});
            for (std::size_t axis = 0; axis < entry.field.space.ndim(); ++axis) {
                plan.push_back({"lemma-4.1-commutation", [entries, index, k, axis] {
                                    const CorpusEntry& e = (*entries)[index];
                                    const auto params =
                                        SteklovParams::from_steps(k, e.field.time);
                                    return std::vector<CheckResult>{
                                        check_commutation(e, params, axis)};
                                }});
            }
            plan.push_back({"lemma-3.1c-pointwise-values", [entries, index, k] {
                                const CorpusEntry& e = (*entries)[index];
                                const auto params = SteklovParams::from_steps(k, e.field.time);
                                return std::vector<CheckResult>{
                                    check_pointwise_values(e, params)};
                            }});
        }
    }

    // Kernel oracle windows include the one-sample and full-span cases.
    for (std::size_t k : std::vector<std::size_t>{1, 2, 8, 64, time.n - 1}) {
        if (overrides.h && SteklovParams::from_seconds(*overrides.h, time).k != k) continue;
        plan.push_back({"kernel-prefix-vs-naive", [entries, index, k] {
                            const CorpusEntry& e = (*entries)[index];
                            const auto params = SteklovParams::from_steps(k, e.field.time);
                            return std::vector<CheckResult>{check_kernel_oracle(e, params)};
                        }});
    }

    plan.push_back({"lemma-5.1a-ftc-derivative", [entries, index] {
                        return std::vector<CheckResult>{
                            check_ftc_derivative((*entries)[index])};
                    }});
    plan.push_back({"lemma-5.2b-ftc-interval", [entries, index] {
                        return std::vector<CheckResult>{check_ftc_interval((*entries)[index])};
                    }});
}

void append_study_jobs(std::vector<CheckJob>& plan, const EntryList& entries,
                       std::size_t index) {
    const CorpusEntry& entry = (*entries)[index];
    if (entry.smoothness != SmoothnessClass::step) {
        // Uniform convergence presumes a continuous field.
        plan.push_back({"lemma-2.2-uniform-convergence", [entries, index] {
                            return std::vector<CheckResult>{check_uniform_convergence(
                                (*entries)[index], Exponent(2.0), kStudyWindows)};
                        }});
    }
    std::vector<Exponent> r_values{Exponent(1.0)};
    if (entry.smoothness == SmoothnessClass::step) r_values.push_back(Exponent(2.0));
    for (const Exponent& r : r_values) {
        plan.push_back({"lemma-2.5a-lr-convergence", [entries, index, r] {
                            return std::vector<CheckResult>{check_lr_convergence(
                                (*entries)[index], BochnerSpec{Exponent(1.0), r},
                                kStudyWindows)};
                        }});
    }
    // The pointwise sweep covers entries whose discontinuities are declared;
    // the Cantor approximant carries piecewise structure far below grid
    // resolution, which this check cannot attribute to a jump window.
    if (entry.smoothness != SmoothnessClass::cantor) {
        plan.push_back({"lemma-2.6-ae-convergence", [entries, index] {
                            return std::vector<CheckResult>{check_ae_convergence(
                                (*entries)[index], Exponent(1.0), kStudyWindows)};
                        }});
    }
}

void append_ibp_jobs(std::vector<CheckJob>& plan, std::uint64_t seed) {
    const std::vector<double> dt_list = {1.0 / 64.0, 1.0 / 128.0, 1.0 / 256.0, 1.0 / 512.0,
                                         1.0 / 1024.0};
    const SpaceGrid space = default_space_grid();

    auto ones = std::make_shared<IbpInputs>();
    ones->name = "ones-pair";
    ones->f = [](std::span<const double>, double) { return 1.0; };
    ones->g = ones->f;
    ones->space = space;

    auto random_pair = std::make_shared<IbpInputs>();
    random_pair->name = "random-pair";
    random_pair->f = random_smooth_sampler(derive_seed(seed, 9001), 3, space.ndim());
    random_pair->g = random_smooth_sampler(derive_seed(seed, 9002), 3, space.ndim());
    random_pair->space = space;

    for (const auto& inputs : {ones, random_pair}) {
        plan.push_back({"lemma-5.3b-integration-by-parts", [inputs, dt_list] {
                            return std::vector<CheckResult>{
                                check_ibp_convergence(*inputs, dt_list)};
                        }});
        for (double dt : dt_list) {
            plan.push_back({"lemma-5.3b-abel-identity", [inputs, dt] {
                                return std::vector<CheckResult>{
                                    check_abel_identity(*inputs, dt)};
                            }});
        }
    }
}

void append_cantor_jobs(std::vector<CheckJob>& plan, const SpaceGrid& space,
                        const TimeGrid& time) {
    for (int level = 1; level <= 8; ++level) {
        plan.push_back({"lemma-5.2c-cantor-counterexample", [level, space, time] {
                            return std::vector<CheckResult>{
                                check_cantor_counterexample(level, space, time)};
                        }});
        plan.push_back({"lemma-5.2c-cantor-restored", [level, space, time] {
                            return std::vector<CheckResult>{
                                check_cantor_restored(level, space, time)};
                        }});
    }
}

std::vector<CheckJob> filter_jobs(std::vector<CheckJob> plan,
                                  const std::vector<std::string>& lemmas) {
    if (lemmas.empty()) return plan;
    std::vector<CheckJob> kept;
    for (auto& job : plan) {
        if (matches_lemma(job.check_id, lemmas)) kept.push_back(std::move(job));
    }
    return kept;
}

} // namespace

bool matches_lemma(const std::string& check_id, const std::vector<std::string>& lemmas) {
    if (lemmas.empty()) return true;
    for (const std::string& token : lemmas) {
        if (!token.empty() && check_id.find(token) != std::string::npos) return true;
    }
    return false;
}

TimeGrid time_grid_from_dt(double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("dt override must be positive");
    }
    const double steps = 1.0 / dt;
    const auto rounded = static_cast<long long>(std::llround(steps));
    if (std::abs(steps - static_cast<double>(rounded)) > 1e-9 || rounded < 128 ||
        rounded % 2 != 0) {
        throw std::invalid_argument(
            "dt override must satisfy 1/dt = even integer >= 128 so that the window sweep "
            "and the step jump stay on-grid; got dt = " +
            std::to_string(dt));
    }
    return TimeGrid(0.0, dt, static_cast<std::size_t>(rounded) + 1);
}

std::vector<CheckJob> standard_jobs(std::uint64_t seed, const SweepOverrides& overrides,
                                    std::size_t random_fields) {
    const SpaceGrid space = default_space_grid();
    const TimeGrid time = overrides.dt ? time_grid_from_dt(*overrides.dt) : default_time_grid();
    auto suite = std::make_shared<std::vector<CorpusEntry>>(standard_suite(space, time));
    const EntryList entries = suite;

    std::vector<CheckJob> plan;
    for (std::size_t i = 0; i < entries->size(); ++i) {
        append_entry_jobs(plan, entries, i, overrides, /*include_expensive=*/true);
    }
    for (std::size_t i = 0; i < entries->size(); ++i) {
        append_study_jobs(plan, entries, i);
    }
    append_ibp_jobs(plan, seed);
    append_cantor_jobs(plan, space, time);

    if (random_fields > 0) {
        auto random_entries = std::make_shared<std::vector<CorpusEntry>>();
        random_entries->reserve(random_fields);
        for (std::size_t i = 0; i < random_fields; ++i) {
            const int modes = 2 + static_cast<int>(i % 3);
            CorpusEntry entry =
                entry_random_smooth(derive_seed(seed, i), modes, space, time);
            entry.name = "random-" + std::to_string(i);
            random_entries->push_back(std::move(entry));
        }
        const EntryList randoms = random_entries;
        for (std::size_t i = 0; i < randoms->size(); ++i) {
            append_entry_jobs(plan, randoms, i, overrides, /*include_expensive=*/false);
        }
    }

    return filter_jobs(std::move(plan), overrides.lemmas);
}

std::vector<CheckJob> study_jobs(std::uint64_t seed, const SweepOverrides& overrides) {
    const SpaceGrid space = default_space_grid();
    const TimeGrid time = overrides.dt ? time_grid_from_dt(*overrides.dt) : default_time_grid();
    auto suite = std::make_shared<std::vector<CorpusEntry>>(standard_suite(space, time));
    const EntryList entries = suite;

    std::vector<CheckJob> plan;
    for (std::size_t i = 0; i < entries->size(); ++i) {
        append_study_jobs(plan, entries, i);
    }
    append_ibp_jobs(plan, seed);
    return filter_jobs(std::move(plan), overrides.lemmas);
}

std::vector<CheckResult> run_jobs(const std::vector<CheckJob>& plan, std::size_t jobs) {
    const std::size_t workers = std::max<std::size_t>(1, jobs);
    std::vector<std::vector<CheckResult>> slots(plan.size());

    if (workers == 1 || plan.size() <= 1) {
        for (std::size_t i = 0; i < plan.size(); ++i) slots[i] = plan[i].run();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= plan.size()) return;
                slots[i] = plan[i].run();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Assembly in job order keeps reports independent of scheduling.
    std::vector<CheckResult> results;
    for (auto& slot : slots) {
        for (auto& r : slot) results.push_back(std::move(r));
    }
    return results;
}

} // namespace steklov
