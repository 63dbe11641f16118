#include "steklov/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "steklov/field_io.hpp"

namespace steklov {

namespace {

using nlohmann::ordered_json;

// JSON has no infinity literal; infinite exponents are written as "inf".
ordered_json json_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

ordered_json result_to_json(const CheckResult& r) {
    ordered_json doc;
    doc["check_id"] = r.check_id;
    doc["field_name"] = r.field_name;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.parameters) params[key] = json_number(value);
    doc["parameters"] = std::move(params);
    doc["measured"] = r.measured;
    doc["bound_or_target"] = r.bound_or_target;
    doc["margin"] = r.margin;
    doc["tolerance"] = r.tolerance;
    doc["passed"] = r.passed;
    doc["runtime_ms"] = r.runtime_ms;
    if (r.study) {
        ordered_json study;
        study["xs"] = r.study->xs;
        study["errors"] = r.study->errors;
        study["fitted_order"] = r.study->fitted_order;
        study["order_target"] = r.study->order_target;
        study["order_window"] = r.study->order_window;
        doc["study"] = std::move(study);
    }
    if (!r.exceptional_indices.empty()) {
        doc["exceptional_indices"] = r.exceptional_indices;
    }
    return doc;
}

std::string csv_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_param(const CheckResult& r, const char* key) {
    const auto it = r.parameters.find(key);
    return it == r.parameters.end() ? std::string() : csv_number(it->second);
}

} // namespace

std::string render_report_json(const std::vector<CheckResult>& results, std::uint64_t seed) {
    ordered_json doc;
    doc["suite_version"] = "1";
    doc["seed"] = seed;
    ordered_json rows = ordered_json::array();
    for (const CheckResult& r : results) rows.push_back(result_to_json(r));
    doc["results"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string render_report_csv(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    out << "check_id,field_name,h,q,r,dt,measured,bound_or_target,margin,tolerance,passed,"
           "runtime_ms\n";
    for (const CheckResult& r : results) {
        out << r.check_id << ',' << r.field_name << ',' << csv_param(r, "h") << ','
            << csv_param(r, "q") << ',' << csv_param(r, "r") << ',' << csv_param(r, "dt") << ','
            << csv_number(r.measured) << ',' << csv_number(r.bound_or_target) << ','
            << csv_number(r.margin) << ',' << csv_number(r.tolerance) << ','
            << (r.passed ? "true" : "false") << ',' << csv_number(r.runtime_ms) << '\n';
    }
    return out.str();
}

void write_report(const std::vector<CheckResult>& results, const std::filesystem::path& path,
                  ReportFormat format, std::uint64_t seed) {
    if (results.empty()) {
        throw std::invalid_argument("write_report: refusing to write an empty report");
    }
    const std::string body = format == ReportFormat::json ? render_report_json(results, seed)
                                                          : render_report_csv(results);

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw io_error("cannot open " + tmp.string());
        out << body;
        if (!out) throw io_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw io_error("cannot move report into place at " + path.string() + ": " +
                       ec.message());
    }
}

} // namespace steklov
