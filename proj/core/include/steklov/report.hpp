#pragma once

#include <filesystem>
#include <vector>

#include "steklov/verify.hpp"

namespace steklov {

enum class ReportFormat { json, csv };

/// Writes the report atomically (temp file + rename).
///
/// JSON: {"suite_version", "seed", "results": [...]} with stable key order;
/// convergence studies carry their raw (x, error) pairs.  CSV: one row per
/// result, columns check_id, field_name, h, q, r, dt, measured,
/// bound_or_target, margin, tolerance, passed, runtime_ms.
/// Throws std::invalid_argument on empty results and io_error on I/O failure.
void write_report(const std::vector<CheckResult>& results, const std::filesystem::path& path,
                  ReportFormat format, std::uint64_t seed);

/// JSON report body as a string (what write_report persists).
std::string render_report_json(const std::vector<CheckResult>& results, std::uint64_t seed);
std::string render_report_csv(const std::vector<CheckResult>& results);

} // namespace steklov
