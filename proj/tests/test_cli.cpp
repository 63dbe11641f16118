#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "steklov/field_io.hpp"
#include "steklov/steklov.hpp"

using namespace steklov;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* path = std::getenv("STEKLOV_CLI");
    REQUIRE_MESSAGE(path != nullptr, "STEKLOV_CLI must point at the CLI binary");
    return path;
}

int run_cli(const std::string& args) {
    const std::string command = "\"" + cli_path() + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

fs::path work_dir() {
    const auto dir = fs::temp_directory_path() / "steklov-cli-tests";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("average applies the restricted window mean") {
    const auto dir = work_dir();
    const SpaceGrid space({9}, {0.125}, {0.0});
    const TimeGrid time(0.0, 0.0625, 17);
    const Field constant = make_field(space, time, [](auto, double) { return 2.25; });
    const auto in_path = dir / "constant.json";
    write_field(constant, in_path, "constant");

    const auto out_path = dir / "constant-avg.json";
    const int code = run_cli("average --in " + in_path.string() + " --h 0.25 --out " +
                             out_path.string());
    CHECK(code == 0);

    const Field averaged = read_field(out_path);
    CHECK(averaged.time.n == time.n - 4);
    for (double v : averaged.values) CHECK(v == doctest::Approx(2.25).epsilon(1e-14));
}

TEST_CASE("average --extended keeps the full interval and tapers at the end") {
    const auto dir = work_dir();
    const SpaceGrid space({5}, {0.25}, {0.0});
    const TimeGrid time(0.0, 0.125, 9);
    write_field(make_field(space, time, [](auto, double) { return 1.0; }),
                dir / "ones.json", "ones");

    const auto out_path = dir / "ones-ext.json";
    CHECK(run_cli("average --extended --in " + (dir / "ones.json").string() +
                  " --h 0.25 --out " + out_path.string()) == 0);

    const Field averaged = read_field(out_path);
    CHECK(averaged.time.n == time.n);
    CHECK(averaged.at(0, 0) == doctest::Approx(1.0));
    CHECK(averaged.at(0, time.n - 1) == 0.0);  // zero extension past the end
}

TEST_CASE("converge-study runs the study subset") {
    const auto dir = work_dir();
    const auto report = dir / "studies.json";
    CHECK(run_cli("converge-study --lemma 2.5 --report " + report.string()) == 0);

    std::ifstream in(report);
    nlohmann::json doc;
    in >> doc;
    CHECK(doc.at("results").size() > 0);
    for (const auto& row : doc["results"]) {
        CHECK(row.at("check_id").get<std::string>().find("lemma-2.5a") == 0);
        CHECK(row.contains("study"));
    }
}

TEST_CASE("average rejects windows that are not multiples of dt") {
    const auto dir = work_dir();
    const SpaceGrid space({3}, {0.5}, {0.0});
    const TimeGrid time(0.0, 0.1, 11);
    write_field(make_field(space, time, [](auto, double t) { return t; }),
                dir / "ramp.json", "ramp");

    CHECK(run_cli("average --in " + (dir / "ramp.json").string() + " --h 0.15 --out " +
                  (dir / "out.json").string()) == 2);
}

TEST_CASE("missing input files exit with the I/O status") {
    const auto dir = work_dir();
    CHECK(run_cli("average --in " + (dir / "absent.json").string() + " --h 0.25 --out " +
                  (dir / "out.json").string()) == 3);
}

TEST_CASE("verify filters by lemma id") {
    const auto dir = work_dir();
    const auto report = dir / "commutation.json";
    const int code =
        run_cli("verify --lemma 4.1 --h 0.125 --report " + report.string());
    CHECK(code == 0);

    std::ifstream in(report);
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    CHECK(doc.at("results").size() > 0);
    for (const auto& row : doc["results"]) {
        CHECK(row.at("check_id").get<std::string>().find("lemma-4.1") == 0);
        CHECK(row.at("passed") == true);
    }
}

TEST_CASE("unknown lemma filters are a usage error") {
    CHECK(run_cli("verify --lemma no-such-check") == 2);
}

TEST_CASE("config file supplies defaults and flags override") {
    const auto dir = work_dir();
    const auto config = dir / "config.json";
    const auto report_from_config = dir / "from-config.json";
    {
        std::ofstream out(config);
        out << R"({"lemma": ["5.2c"], "report": ")" << report_from_config.string()
            << R"(", "seed": 7})";
    }
    CHECK(run_cli("verify --config " + config.string()) == 0);
    CHECK(fs::exists(report_from_config));

    std::ifstream in(report_from_config);
    nlohmann::json doc;
    in >> doc;
    CHECK(doc.at("seed") == 7);
    for (const auto& row : doc["results"]) {
        CHECK(row.at("check_id").get<std::string>().find("lemma-5.2c") == 0);
    }

    // A flag beats the config file.
    const auto report_override = dir / "override.json";
    CHECK(run_cli("verify --config " + config.string() + " --report " +
                  report_override.string()) == 0);
    CHECK(fs::exists(report_override));
}

TEST_CASE("gen-corpus writes readable field files") {
    const auto dir = work_dir() / "corpus";
    CHECK(run_cli("gen-corpus --out " + dir.string()) == 0);

    std::size_t manifests = 0;
    for (const auto& item : fs::directory_iterator(dir)) {
        if (item.path().extension() == ".json") ++manifests;
    }
    CHECK(manifests >= 6);

    const Field constant = read_field(dir / "constant.json");
    for (double v : constant.values) CHECK(v == 3.0);
    CHECK(read_field_name(dir / "constant.json") == "constant");
}

TEST_CASE("csv reports are accepted") {
    const auto dir = work_dir();
    const auto report = dir / "kernel.csv";
    CHECK(run_cli("verify --lemma kernel --format csv --report " + report.string()) == 0);
    std::ifstream in(report);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "check_id,field_name,h,q,r,dt,measured,bound_or_target,margin,tolerance,passed,"
          "runtime_ms");
}
