// Command-line front end: corpus generation, operator application,
// verification runs and report emission.
//
// Exit codes: 0 all checks passed, 1 check failures, 2 invalid usage or
// configuration, 3 I/O errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steklov/field_io.hpp"
#include "steklov/harness.hpp"
#include "steklov/report.hpp"

namespace {

using steklov::Exponent;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIoError = 3;

struct CliOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> report_path;
    std::optional<std::string> format;
    std::optional<std::size_t> jobs;
    std::vector<std::string> lemmas;
    std::optional<double> h;
    std::optional<std::string> q;
    std::optional<std::string> r;
    std::optional<double> dt;
    std::string in_path;
    std::string out_path;
    bool extended = false;
};

// Precedence: command-line flag > config file > built-in default.
void merge_config_file(CliOptions& opts) {
    if (opts.config_path.empty()) return;
    std::ifstream in(opts.config_path);
    if (!in) throw steklov::io_error("cannot open config file " + opts.config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed config file " + opts.config_path + ": " +
                                    e.what());
    }
    try {
        if (!opts.seed && doc.contains("seed")) opts.seed = doc["seed"].get<std::uint64_t>();
        if (!opts.report_path && doc.contains("report")) {
            opts.report_path = doc["report"].get<std::string>();
        }
        if (!opts.format && doc.contains("format")) {
            opts.format = doc["format"].get<std::string>();
        }
        if (!opts.jobs && doc.contains("jobs")) opts.jobs = doc["jobs"].get<std::size_t>();
        if (opts.lemmas.empty() && doc.contains("lemma")) {
            opts.lemmas = doc["lemma"].get<std::vector<std::string>>();
        }
        if (!opts.h && doc.contains("h")) opts.h = doc["h"].get<double>();
        if (!opts.q && doc.contains("q")) opts.q = doc["q"].dump();
        if (!opts.r && doc.contains("r")) opts.r = doc["r"].dump();
        if (!opts.dt && doc.contains("dt")) opts.dt = doc["dt"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad value in config file: " + std::string(e.what()));
    }
}

std::optional<Exponent> parse_exponent(const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    std::string s = *text;
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);  // config-file values arrive JSON-quoted
    }
    return Exponent::parse(s);
}

steklov::ReportFormat parse_format(const std::optional<std::string>& format) {
    const std::string value = format.value_or("json");
    if (value == "json") return steklov::ReportFormat::json;
    if (value == "csv") return steklov::ReportFormat::csv;
    throw std::invalid_argument("unknown report format '" + value + "' (use json or csv)");
}

int run_checks(const CliOptions& opts, bool studies_only) {
    const std::uint64_t seed = opts.seed.value_or(42);
    const std::size_t jobs = opts.jobs.value_or(1);

    steklov::SweepOverrides overrides;
    overrides.lemmas = opts.lemmas;
    overrides.h = opts.h;
    overrides.q = parse_exponent(opts.q);
    overrides.r = parse_exponent(opts.r);
    overrides.dt = opts.dt;

    const auto plan = studies_only ? steklov::study_jobs(seed, overrides)
                                   : steklov::standard_jobs(seed, overrides);
    if (plan.empty()) {
        std::cerr << "no checks match the requested filter\n";
        return kExitBadConfig;
    }
    const auto results = steklov::run_jobs(plan, jobs);

    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.passed) {
            ++failed;
            std::cout << "FAIL " << r.check_id << " [" << r.field_name
                      << "] measured=" << r.measured << " bound=" << r.bound_or_target
                      << " margin=" << r.margin << "\n";
        }
    }
    std::cout << results.size() << " checks, " << (results.size() - failed) << " passed, "
              << failed << " failed\n";

    const std::string report_path = opts.report_path.value_or("steklov-report.json");
    steklov::write_report(results, report_path, parse_format(opts.format), seed);
    std::cout << "report written to " << report_path << "\n";

    return failed == 0 ? kExitOk : kExitCheckFailure;
}

int run_average(const CliOptions& opts) {
    const steklov::Field input = steklov::read_field(opts.in_path);
    if (!opts.h) throw std::invalid_argument("average: --h is required");
    const auto params = steklov::SteklovParams::from_seconds(*opts.h, input.time);

    const steklov::Field output = opts.extended
                                      ? steklov::steklov_average_extended(input, params)
                                      : steklov::steklov_average(input, params);
    const std::string name = steklov::read_field_name(opts.in_path) + "-avg";
    steklov::write_field(output, opts.out_path, name);
    std::cout << "averaged field written to " << opts.out_path << " (" << output.time.n
              << " time points)\n";
    return kExitOk;
}

int run_gen_corpus(const CliOptions& opts) {
    const std::filesystem::path dir = opts.out_path;
    std::filesystem::create_directories(dir);
    const auto suite = steklov::standard_suite();
    for (const auto& entry : suite) {
        const auto manifest = dir / (entry.name + ".json");
        steklov::write_field(entry.field, manifest, entry.name);
        std::cout << "wrote " << manifest.string() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steklov time-averaging operator and property-verification harness"};
    app.require_subcommand(1);
    // --h is a domain flag (window length), so help stays on --help only.
    app.set_help_flag("--help", "print help and exit");

    CliOptions opts;
    auto add_common = [&opts](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help and exit");
        cmd->add_option("--config", opts.config_path, "JSON config file; flags take precedence");
        cmd->add_option("--seed", opts.seed, "seed for random-field generation (default 42)");
        cmd->add_option("--report", opts.report_path, "report path (default steklov-report.json)");
        cmd->add_option("--format", opts.format, "report format: json or csv");
        cmd->add_option("--jobs", opts.jobs, "worker count (default 1)");
    };

    CLI::App* verify_all = app.add_subcommand("verify-all", "run every check in the suite");
    add_common(verify_all);
    verify_all->add_option("--dt", opts.dt, "suite grid step override (1/dt even, >= 128)");

    CLI::App* verify = app.add_subcommand("verify", "run checks filtered by lemma id");
    add_common(verify);
    verify->add_option("--lemma", opts.lemmas, "lemma ids, e.g. 2.4 4.1 kernel")
        ->delimiter(',');
    verify->add_option("--h", opts.h, "window length; replaces the window sweep");
    verify->add_option("--q", opts.q, "spatial exponent (>=1 or inf); narrows the sweep");
    verify->add_option("--r", opts.r, "time exponent (>=1 or inf); narrows the sweep");
    verify->add_option("--dt", opts.dt, "suite grid step override (1/dt even, >= 128)");

    CLI::App* converge = app.add_subcommand("converge-study", "run the convergence studies");
    add_common(converge);
    converge->add_option("--lemma", opts.lemmas, "lemma ids to keep")->delimiter(',');
    converge->add_option("--dt", opts.dt, "suite grid step override (1/dt even, >= 128)");

    CLI::App* average = app.add_subcommand("average", "apply the windowed time average");
    average->set_help_flag("--help", "print help and exit");
    average->add_option("--in", opts.in_path, "input field manifest")->required();
    average->add_option("--out", opts.out_path, "output field manifest")->required();
    average->add_option("--h", opts.h, "window length in seconds (multiple of dt)")->required();
    average->add_flag("--extended", opts.extended,
                      "use the zero-extended operator on the full interval");

    CLI::App* gen = app.add_subcommand("gen-corpus", "write the standard suite as field files");
    add_common(gen);
    gen->add_option("--out", opts.out_path, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadConfig;
    }

    try {
        merge_config_file(opts);
        if (verify_all->parsed()) return run_checks(opts, false);
        if (verify->parsed()) return run_checks(opts, false);
        if (converge->parsed()) return run_checks(opts, true);
        if (average->parsed()) return run_average(opts);
        if (gen->parsed()) return run_gen_corpus(opts);
    } catch (const steklov::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitBadConfig;
}
