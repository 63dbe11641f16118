#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "steklov/harness.hpp"
#include "steklov/verify.hpp"

using namespace steklov;

namespace {

const std::vector<std::size_t> kWindows = {64, 32, 16, 8, 4};

CorpusEntry suite_entry(SmoothnessClass c) {
    for (auto& entry : standard_suite()) {
        if (entry.smoothness == c && entry.field.space.ndim() == 1) return entry;
    }
    FAIL("class missing from suite");
    return standard_suite().front();
}

} // namespace

TEST_CASE("estimate_order recovers exact power laws") {
    const std::vector<double> hs = {0.4, 0.2, 0.1, 0.05, 0.025};
    std::vector<double> linear;
    std::vector<double> quadratic;
    for (double h : hs) {
        linear.push_back(3.0 * h);
        quadratic.push_back(0.7 * h * h);
    }
    CHECK(estimate_order(hs, linear) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(estimate_order(hs, quadratic) == doctest::Approx(2.0).epsilon(1e-9));

    CHECK_THROWS_AS(estimate_order({0.1, 0.05}, {1.0, 0.5}), std::invalid_argument);
    // Points at the floor are excluded; too few usable points is an error.
    CHECK_THROWS_AS(estimate_order(hs, {1.0, 0.5, 0.0, 0.0, 0.0}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("contraction check on suite entries") {
    const CorpusEntry constant = suite_entry(SmoothnessClass::constant);
    const auto params = SteklovParams::from_steps(8, constant.field.time);

    const CheckResult r =
        check_contraction(constant, {Exponent(2.0), Exponent(2.0)}, params);
    CHECK(r.passed);
    CHECK(r.check_id == "lemma-2.4d-contraction");
    // Zero extension at the right end strictly lowers the extended norm.
    CHECK(r.measured < r.bound_or_target);

    const CorpusEntry step = suite_entry(SmoothnessClass::step);
    for (double q : {1.0, 2.0}) {
        for (double r_exp : {1.0, 2.0}) {
            CHECK(check_contraction(step, {Exponent(q), Exponent(r_exp)}, params).passed);
        }
        CHECK(check_contraction(step, {Exponent(q), Exponent::inf()}, params).passed);
    }
}

TEST_CASE("restricted operator attains contraction equality for constants") {
    // Averaging preserves constants, and on I_h (with the norm taken over the
    // restricted interval) the two sides agree exactly.
    const SpaceGrid space({4}, {0.25}, {0.0});
    const TimeGrid time(0.0, 0.125, 17);
    const Field c = make_field(space, time, [](auto, double) { return 2.5; });
    const auto params = SteklovParams::from_steps(4, time);

    const Field averaged = steklov_average(c, params);
    const Field restricted_input{space, averaged.time,
                                 std::vector<double>(averaged.values.size(), 2.5)};
    const BochnerSpec spec{Exponent(2.0), Exponent(1.0)};
    CHECK(bochner_norm(averaged, spec) ==
          doctest::Approx(bochner_norm(restricted_input, spec)).epsilon(1e-14));
}

TEST_CASE("pointwise bound check reproduces the frozen example") {
    // v = 1 on I of length 1, r = 1, h = 0.5: measured 1 <= bound 2.
    const SpaceGrid space({4}, {0.25}, {0.0});
    const TimeGrid time(0.0, 0.25, 5);
    CorpusEntry entry = entry_constant(1.0, space, time);
    const auto params = SteklovParams::from_seconds(0.5, time);

    const CheckResult r = check_pointwise_bound(entry, {Exponent(1.0), Exponent(1.0)}, params);
    CHECK(r.passed);
    CHECK(r.measured == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.bound_or_target == doctest::Approx(2.0).epsilon(1e-12));

    // r = inf: window means never exceed the sup.
    const CheckResult sup = check_pointwise_bound(entry, {Exponent(1.0), Exponent::inf()},
                                                  params);
    CHECK(sup.passed);
    CHECK(sup.measured <= sup.bound_or_target + 1e-15);
}

TEST_CASE("lipschitz check") {
    const CorpusEntry constant = suite_entry(SmoothnessClass::constant);
    const auto params = SteklovParams::from_steps(16, constant.field.time);
    const CheckResult r = check_lipschitz(constant, Exponent(2.0), params);
    CHECK(r.passed);
    CHECK(r.measured == 0.0);

    // The worst pair of the step entry straddles the ramp: about jump / h.
    const CorpusEntry step = suite_entry(SmoothnessClass::step);
    const CheckResult rs = check_lipschitz(step, Exponent(1.0), params);
    CHECK(rs.passed);
    const double measure = 65.0 / 64.0;  // discrete |E| of the default grid
    CHECK(rs.measured == doctest::Approx(measure / params.h).epsilon(0.1));
    CHECK(rs.measured <= rs.bound_or_target);
}

TEST_CASE("uniform convergence study") {
    SUBCASE("constants are exact at every window") {
        const CheckResult r = check_uniform_convergence(
            suite_entry(SmoothnessClass::constant), Exponent(2.0), kWindows);
        CHECK(r.passed);
        REQUIRE(r.study.has_value());
        for (double e : r.study->errors) CHECK(e <= 1e-12);
    }
    SUBCASE("the ramp error is (h - dt)/2 with fitted order near one") {
        const CorpusEntry linear = suite_entry(SmoothnessClass::polynomial);
        const CheckResult r = check_uniform_convergence(linear, Exponent::inf(), kWindows);
        CHECK(r.passed);
        REQUIRE(r.study.has_value());
        const double dt = linear.field.time.dt;
        for (std::size_t i = 0; i < kWindows.size(); ++i) {
            const double h = static_cast<double>(kWindows[i]) * dt;
            CHECK(r.study->errors[i] == doctest::Approx(0.5 * (h - dt)).epsilon(1e-10));
        }
        CHECK(r.study->fitted_order == doctest::Approx(1.0).epsilon(0.11));
    }
    SUBCASE("rejects short sweeps") {
        CHECK_THROWS_AS(check_uniform_convergence(suite_entry(SmoothnessClass::polynomial),
                                                  Exponent(2.0), {8, 4}),
                        std::invalid_argument);
    }
}

TEST_CASE("L^r convergence orders: 1 for a unit jump at r=1, 1/2 at r=2") {
    const CorpusEntry step = suite_entry(SmoothnessClass::step);
    const CheckResult r1 =
        check_lr_convergence(step, {Exponent(1.0), Exponent(1.0)}, kWindows);
    CHECK(r1.passed);
    REQUIRE(r1.study.has_value());
    CHECK(r1.study->fitted_order == doctest::Approx(1.0).epsilon(0.15));

    // Closed form: the ramp contributes dt * sum_{l<k} (l/k)^r; for r = 1
    // that is (h - dt)/2 scaled by the discrete measure of E.
    const double dt = step.field.time.dt;
    const double measure = 65.0 / 64.0;
    for (std::size_t i = 0; i < kWindows.size(); ++i) {
        const double h = static_cast<double>(kWindows[i]) * dt;
        CHECK(r1.study->errors[i] ==
              doctest::Approx(0.5 * (h - dt) * measure).epsilon(1e-10));
    }

    const CheckResult r2 =
        check_lr_convergence(step, {Exponent(1.0), Exponent(2.0)}, kWindows);
    CHECK(r2.passed);
    REQUIRE(r2.study.has_value());
    CHECK(r2.study->fitted_order == doctest::Approx(0.5).epsilon(0.3));

    CHECK_THROWS_AS(check_lr_convergence(step, {Exponent(1.0), Exponent::inf()}, kWindows),
                    std::invalid_argument);
}

TEST_CASE("pointwise convergence localizes the exceptional set at the jump") {
    const CorpusEntry step = suite_entry(SmoothnessClass::step);
    const CheckResult r = check_ae_convergence(step, Exponent(1.0), kWindows);
    CHECK(r.passed);
    CHECK(r.measured == 0.0);
    CHECK(!r.exceptional_indices.empty());
    const double jump = *step.discontinuity;
    const double h_max = 64.0 * step.field.time.dt;
    for (std::size_t j : r.exceptional_indices) {
        const double t = step.field.time.point(j);
        CHECK(t > jump - h_max);
        CHECK(t < jump);
    }

    // At the jump itself the forward window sees the right-continuous value.
    const std::size_t jump_index = 128;
    for (std::size_t j : r.exceptional_indices) CHECK(j != jump_index);

    for (SmoothnessClass c : {SmoothnessClass::constant, SmoothnessClass::smooth_periodic,
                              SmoothnessClass::random_smooth}) {
        const CheckResult smooth = check_ae_convergence(suite_entry(c), Exponent(1.0), kWindows);
        CHECK(smooth.passed);
        CHECK(smooth.exceptional_indices.empty());
    }

    // The Cantor approximant keeps piecewise features far below grid
    // resolution; the sweep reports the unresolved points rather than
    // attributing them to a declared jump.
    const CheckResult cantor =
        check_ae_convergence(suite_entry(SmoothnessClass::cantor), Exponent(1.0), kWindows);
    CHECK(!cantor.exceptional_indices.empty());
}

TEST_CASE("commutation and time-derivative identities hold on the suite") {
    for (const auto& entry : standard_suite()) {
        for (std::size_t k : {1u, 8u, 64u}) {
            const auto params = SteklovParams::from_steps(k, entry.field.time);
            for (std::size_t axis = 0; axis < entry.field.space.ndim(); ++axis) {
                CHECK(check_commutation(entry, params, axis).passed);
            }
            CHECK(check_time_derivative(entry, params).passed);
            CHECK(check_pointwise_values(entry, params).passed);
        }
    }
}

TEST_CASE("fundamental-theorem checks are exact on the suite") {
    for (const auto& entry : standard_suite()) {
        CHECK(check_ftc_derivative(entry).passed);
        CHECK(check_ftc_interval(entry).passed);
    }
}

TEST_CASE("kernel oracle check") {
    const CorpusEntry entry = suite_entry(SmoothnessClass::random_smooth);
    for (std::size_t k : {1ul, 2ul, 8ul, 64ul, entry.field.time.n - 1}) {
        CHECK(check_kernel_oracle(entry, SteklovParams::from_steps(k, entry.field.time))
                  .passed);
    }
}

TEST_CASE("integration-by-parts study and the Cantor demonstration") {
    IbpInputs ones;
    ones.name = "ones";
    ones.f = [](std::span<const double>, double) { return 1.0; };
    ones.g = ones.f;
    ones.space = SpaceGrid({5}, {0.25}, {0.0});

    const std::vector<double> dt_list = {1.0 / 64.0, 1.0 / 128.0, 1.0 / 256.0, 1.0 / 512.0};
    const CheckResult study = check_ibp_convergence(ones, dt_list);
    CHECK(study.passed);
    REQUIRE(study.study.has_value());
    CHECK(study.study->fitted_order == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 0; i < dt_list.size(); ++i) {
        CHECK(study.study->errors[i] == doctest::Approx(dt_list[i]).epsilon(1e-10));
    }
    CHECK(check_abel_identity(ones, 1.0 / 256.0).passed);

    const SpaceGrid space = default_space_grid();
    const TimeGrid time = default_time_grid();
    for (int level : {1, 4, 8}) {
        const CheckResult counter = check_cantor_counterexample(level, space, time);
        CHECK(counter.passed);
        CHECK(counter.measured == doctest::Approx(1.0).epsilon(1e-14));
        const CheckResult restored = check_cantor_restored(level, space, time);
        CHECK(restored.passed);
        CHECK(restored.measured <= 1e-12);
    }
    // The discrepancy does not depend on the level.
    const double d1 = check_cantor_counterexample(1, space, time).measured;
    const double d8 = check_cantor_counterexample(8, space, time).measured;
    CHECK(d1 == d8);
}

TEST_CASE("suite grid override validation") {
    const TimeGrid fine = time_grid_from_dt(1.0 / 512.0);
    CHECK(fine.n == 513);
    CHECK(fine.dt == doctest::Approx(1.0 / 512.0));
    CHECK_THROWS_AS(time_grid_from_dt(0.003), std::invalid_argument);
    CHECK_THROWS_AS(time_grid_from_dt(1.0 / 64.0), std::invalid_argument);   // too coarse
    CHECK_THROWS_AS(time_grid_from_dt(1.0 / 129.0), std::invalid_argument);  // odd step count
    CHECK_THROWS_AS(time_grid_from_dt(-0.25), std::invalid_argument);
}

TEST_CASE("harness job filtering and deterministic parallel execution") {
    CHECK(matches_lemma("lemma-4.1-commutation", {"4.1"}));
    CHECK(matches_lemma("lemma-2.4d-contraction", {"2.4"}));
    CHECK(matches_lemma("kernel-prefix-vs-naive", {"kernel"}));
    CHECK(!matches_lemma("lemma-4.1-commutation", {"5.3"}));
    CHECK(matches_lemma("anything", {}));

    SweepOverrides overrides;
    overrides.lemmas = {"4.1"};
    overrides.h = 0.125;
    const auto plan = standard_jobs(7u, overrides, 0);
    CHECK(!plan.empty());
    for (const auto& job : plan) {
        CHECK(job.check_id == "lemma-4.1-commutation");
    }

    const auto serial = run_jobs(plan, 1);
    const auto parallel = run_jobs(plan, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].check_id == parallel[i].check_id);
        CHECK(serial[i].field_name == parallel[i].field_name);
        CHECK(serial[i].measured == parallel[i].measured);
        CHECK(serial[i].margin == parallel[i].margin);
        CHECK(serial[i].passed == parallel[i].passed);
    }
}
