#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "steklov/corpus.hpp"
#include "steklov/field.hpp"
#include "steklov/field_io.hpp"

using namespace steklov;

namespace {

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "steklov-field-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(TimeGrid(0.0, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid(0.0, -1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(SpaceGrid({}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SpaceGrid({4, 4, 4, 4}, {1, 1, 1, 1}, {0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpaceGrid({4}, {0.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(SpaceGrid({4, 0}, {1.0, 1.0}, {0.0, 0.0}), std::invalid_argument);

    const TimeGrid time(1.0, 0.5, 5);
    CHECK(time.point(0) == 1.0);
    CHECK(time.point(4) == 3.0);
    CHECK(time.end() == 3.0);
    CHECK(time.length() == 2.0);

    const SpaceGrid plane({2, 3}, {0.5, 0.25}, {0.0, 1.0});
    CHECK(plane.point_count() == 6);
    CHECK(plane.cell_volume() == doctest::Approx(0.125));
    const auto x = plane.coords(4);  // index (1, 1)
    CHECK(x[0] == doctest::Approx(0.5));
    CHECK(x[1] == doctest::Approx(1.25));
}

TEST_CASE("make_field samples grid points") {
    const SpaceGrid space({2}, {1.0}, {0.0});
    const TimeGrid time(0.0, 1.0, 2);

    const Field zeros = make_field(space, time, [](auto, double) { return 0.0; });
    for (double v : zeros.values) CHECK(v == 0.0);

    const TimeGrid three(0.0, 0.1, 3);
    const Field ramp = make_field(space, three, [](auto, double t) { return t; });
    for (std::size_t s = 0; s < 2; ++s) {
        CHECK(ramp.at(s, 0) == doctest::Approx(0.0));
        CHECK(ramp.at(s, 1) == doctest::Approx(0.1));
        CHECK(ramp.at(s, 2) == doctest::Approx(0.2));
    }

    const Field product =
        make_field(space, time, [](std::span<const double> x, double t) { return x[0] * t; });
    CHECK(product.values == std::vector<double>{0.0, 0.0, 0.0, 1.0});
}

TEST_CASE("make_field rejects non-finite samples naming the point") {
    const SpaceGrid space({2}, {1.0}, {0.0});
    const TimeGrid time(0.0, 1.0, 2);
    try {
        make_field(space, time, [](std::span<const double> x, double t) {
            return x[0] == 1.0 && t == 1.0 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
        });
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("x = (1") != std::string::npos);
        CHECK(msg.find("t = 1") != std::string::npos);
    }
}

TEST_CASE("sample_extended is zero outside I and left-constant inside") {
    const SpaceGrid space({1}, {1.0}, {0.0});
    const TimeGrid time(1.0, 1.0, 3);  // samples at t = 1, 2, 3
    const Field field = make_field(space, time, [](auto, double t) { return 10.0 * t; });

    CHECK(sample_extended(field, 0, 0.0) == 0.0);
    CHECK(sample_extended(field, 0, 3.5) == 0.0);
    CHECK(sample_extended(field, 0, 1.0) == 10.0);
    CHECK(sample_extended(field, 0, 1.4) == 10.0);  // nearest grid time below
    CHECK(sample_extended(field, 0, 2.999) == 20.0);
    CHECK(sample_extended(field, 0, 3.0) == 30.0);
    CHECK_THROWS_AS(sample_extended(field, 5, 1.0), std::invalid_argument);
}

TEST_CASE("field file round trip is bit-exact") {
    const auto dir = temp_dir();
    for (const SpaceGrid& space :
         {SpaceGrid({17}, {0.0625}, {0.0}), SpaceGrid({5, 7}, {0.25, 0.125}, {0.0, -1.0}),
          SpaceGrid({3, 3, 3}, {0.5, 0.5, 0.5}, {0.0, 0.0, 0.0})}) {
        const TimeGrid time(0.25, 1.0 / 32.0, 33);
        const Field field =
            make_field(space, time, random_smooth_sampler(1234u, 3, space.ndim()));

        const auto manifest = dir / ("roundtrip-" + std::to_string(space.ndim()) + "d.json");
        write_field(field, manifest, "roundtrip");
        const Field loaded = read_field(manifest);

        CHECK(loaded.space == field.space);
        CHECK(loaded.time == field.time);
        CHECK(loaded.values == field.values);
        CHECK(read_field_name(manifest) == "roundtrip");
    }
}

TEST_CASE("read_field rejects length mismatches and non-finite payloads") {
    const auto dir = temp_dir();
    const SpaceGrid space({4}, {0.25}, {0.0});
    const TimeGrid time(0.0, 0.5, 3);
    const Field field = make_field(space, time, [](auto, double t) { return t + 1.0; });

    const auto manifest = dir / "corrupt.json";
    write_field(field, manifest, "corrupt");

    auto data_path = manifest;
    data_path.replace_extension(".f64");

    SUBCASE("short payload") {
        std::filesystem::resize_file(data_path, 8 * (field.values.size() - 1));
        CHECK_THROWS_AS(read_field(manifest), io_error);
    }
    SUBCASE("long payload") {
        std::ofstream out(data_path, std::ios::binary | std::ios::app);
        const double extra = 0.0;
        out.write(reinterpret_cast<const char*>(&extra), sizeof(extra));
        out.close();
        CHECK_THROWS_AS(read_field(manifest), io_error);
    }
    SUBCASE("NaN payload") {
        std::fstream out(data_path, std::ios::binary | std::ios::in | std::ios::out);
        const double bad = std::numeric_limits<double>::quiet_NaN();
        out.write(reinterpret_cast<const char*>(&bad), sizeof(bad));
        out.close();
        CHECK_THROWS_AS(read_field(manifest), io_error);
    }
    SUBCASE("malformed manifest") {
        std::ofstream out(manifest, std::ios::trunc);
        out << "{not json";
        out.close();
        CHECK_THROWS_AS(read_field(manifest), io_error);
    }
    SUBCASE("missing manifest") {
        CHECK_THROWS_AS(read_field(dir / "does-not-exist.json"), io_error);
    }
}

TEST_CASE("validate_field enforces the invariants") {
    const SpaceGrid space({2}, {1.0}, {0.0});
    const TimeGrid time(0.0, 1.0, 2);
    Field field = make_field(space, time, [](auto, double) { return 1.0; });
    CHECK_NOTHROW(validate_field(field));

    Field short_values = field;
    short_values.values.pop_back();
    CHECK_THROWS_AS(validate_field(short_values), std::invalid_argument);

    Field with_inf = field;
    with_inf.values[1] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_field(with_inf), std::invalid_argument);
}
