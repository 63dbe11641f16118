#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steklov/corpus.hpp"
#include "steklov/norms.hpp"

using namespace steklov;

namespace {

// 1-D grid whose discrete measure sums exactly to one.
SpaceGrid unit_measure_space(std::size_t points) {
    return SpaceGrid({points}, {1.0 / static_cast<double>(points)}, {0.0});
}

Field constant_field(double c, const SpaceGrid& space, const TimeGrid& time) {
    return make_field(space, time, [c](auto, double) { return c; });
}

} // namespace

TEST_CASE("exponent parsing and validation") {
    CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
    CHECK_THROWS_AS(Exponent(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK(Exponent(1.0).value() == 1.0);
    CHECK(Exponent(2.5).value() == 2.5);
    CHECK(Exponent::inf().is_inf());
    CHECK(Exponent::parse("inf").is_inf());
    CHECK(Exponent::parse("2").value() == 2.0);
    CHECK_THROWS_AS(Exponent::parse("two"), std::invalid_argument);
    CHECK_THROWS_AS(Exponent::parse("2x"), std::invalid_argument);
    CHECK(Exponent(3.0).str() == "3");
    CHECK(Exponent::inf().str() == "inf");
}

TEST_CASE("spatial norm on constants and simple sums") {
    const TimeGrid time(0.0, 0.5, 3);

    // ||2||_{L^2} = 2 on a unit-measure domain.
    const Field two = constant_field(2.0, unit_measure_space(8), time);
    CHECK(lq_space_norm(two, 0, Exponent(2.0)) == doctest::Approx(2.0).epsilon(1e-12));

    const Field zero = constant_field(0.0, unit_measure_space(8), time);
    for (double q : {1.0, 2.0, 3.5}) {
        CHECK(lq_space_norm(zero, 0, Exponent(q)) == 0.0);
    }
    CHECK(lq_space_norm(zero, 0, Exponent::inf()) == 0.0);

    // Two cells of volume 0.5 holding (1, 3): L^1 norm 0.5*1 + 0.5*3 = 2.
    const SpaceGrid halves({2}, {0.5}, {0.0});
    Field pair_field = constant_field(0.0, halves, time);
    for (std::size_t j = 0; j < time.n; ++j) {
        pair_field.at(0, j) = 1.0;
        pair_field.at(1, j) = 3.0;
    }
    CHECK(lq_space_norm(pair_field, 0, Exponent(1.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lq_space_norm(pair_field, 0, Exponent::inf()) == 3.0);
    CHECK_THROWS_AS(lq_space_norm(pair_field, 7, Exponent(1.0)), std::invalid_argument);
}

TEST_CASE("bochner norm uses left-Riemann time quadrature") {
    // I = [0, 1], 5 points; the final point carries no weight.
    const TimeGrid time(0.0, 0.25, 5);
    const SpaceGrid space = unit_measure_space(4);

    const Field c = constant_field(-1.5, space, time);
    CHECK(bochner_norm(c, {Exponent(2.0), Exponent(2.0)}) ==
          doctest::Approx(1.5).epsilon(1e-12));
    CHECK(bochner_norm(c, {Exponent(1.0), Exponent(1.0)}) ==
          doctest::Approx(1.5).epsilon(1e-12));

    const Field zero = constant_field(0.0, space, time);
    CHECK(bochner_norm(zero, {Exponent(1.0), Exponent(3.0)}) == 0.0);

    // v(t) = t: 0.25 * (0 + 0.25 + 0.5 + 0.75) = 0.375.
    const Field ramp = make_field(space, time, [](auto, double t) { return t; });
    CHECK(bochner_norm(ramp, {Exponent(1.0), Exponent(1.0)}) ==
          doctest::Approx(0.375).epsilon(1e-12));

    // r = inf is the max over every grid point, endpoint included.
    CHECK(ess_sup_time(ramp, Exponent::inf()) == doctest::Approx(1.0));
    CHECK(bochner_norm(ramp, {Exponent::inf(), Exponent::inf()}) == doctest::Approx(1.0));
}

TEST_CASE("ess_sup_time equals the r = inf Bochner norm") {
    const Field field = make_field(unit_measure_space(16), TimeGrid(0.0, 1.0 / 32.0, 33),
                                   random_smooth_sampler(99u, 3, 1));
    for (double q : {1.0, 2.0, 4.5}) {
        CHECK(ess_sup_time(field, Exponent(q)) ==
              doctest::Approx(bochner_norm(field, {Exponent(q), Exponent::inf()}))
                  .epsilon(1e-15));
    }
}

TEST_CASE("cumulative norm V is a nondecreasing partial sum") {
    const SpaceGrid space = unit_measure_space(4);

    // v = 1, dt = 0.5: one-term sum is 0.5.
    const TimeGrid coarse(0.0, 0.5, 3);
    const Field ones = constant_field(1.0, space, coarse);
    const BochnerSpec l1{Exponent(1.0), Exponent(1.0)};
    CHECK(cumulative_norm_V(ones, l1, 0) == 0.0);
    CHECK(cumulative_norm_V(ones, l1, 1) == doctest::Approx(0.5).epsilon(1e-12));

    const Field field = make_field(space, TimeGrid(0.0, 1.0 / 64.0, 65),
                                   random_smooth_sampler(5u, 3, 1));
    const BochnerSpec spec{Exponent(2.0), Exponent(2.0)};
    double previous = 0.0;
    for (std::size_t j = 0; j < field.time.n; ++j) {
        const double v = cumulative_norm_V(field, spec, j);
        CHECK(v >= previous);
        previous = v;
    }
    const double full = cumulative_norm_V(field, spec, field.time.n - 1);
    const double norm_r = std::pow(bochner_norm(field, spec), spec.r.value());
    CHECK(full == doctest::Approx(norm_r).epsilon(1e-12));

    CHECK_THROWS_AS(cumulative_norm_V(field, {Exponent(1.0), Exponent::inf()}, 1),
                    std::invalid_argument);
}

TEST_CASE("norm chain on a probability space: L1 <= Lq <= Linf") {
    const SpaceGrid space = unit_measure_space(32);
    const TimeGrid time(0.0, 0.25, 5);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const Field field = make_field(space, time, random_smooth_sampler(seed, 4, 1));
        for (std::size_t j = 0; j < time.n; ++j) {
            const double l1 = lq_space_norm(field, j, Exponent(1.0));
            const double linf = lq_space_norm(field, j, Exponent::inf());
            for (double q : {1.5, 2.0, 3.0, 7.5}) {
                const double lq = lq_space_norm(field, j, Exponent(q));
                CHECK(l1 <= lq * (1.0 + 1e-12));
                CHECK(lq <= linf * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("homogeneity: scaling the field scales every norm") {
    const Field field = make_field(unit_measure_space(16), TimeGrid(0.0, 1.0 / 16.0, 17),
                                   random_smooth_sampler(77u, 3, 1));
    const double lambda = -2.75;
    Field scaled = field;
    for (double& v : scaled.values) v *= lambda;

    for (double q : {1.0, 1.5, 2.0}) {
        for (double r : {1.0, 2.0, 4.0}) {
            const BochnerSpec spec{Exponent(q), Exponent(r)};
            CHECK(bochner_norm(scaled, spec) ==
                  doctest::Approx(std::abs(lambda) * bochner_norm(field, spec))
                      .epsilon(1e-12));
        }
        const BochnerSpec sup_spec{Exponent(q), Exponent::inf()};
        CHECK(bochner_norm(scaled, sup_spec) ==
              doctest::Approx(std::abs(lambda) * bochner_norm(field, sup_spec))
                  .epsilon(1e-12));
    }
}
