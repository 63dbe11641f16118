#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "steklov/field.hpp"

namespace steklov {

/// I/O failure distinct from contract violations; the CLI maps it to exit 3.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk format: a JSON manifest
///   {"name": ..., "space": {"ndim","shape","spacing","origin"},
///    "time": {"t0","dt","n"}, "data": <relative path>}
/// plus a raw headerless file of little-endian IEEE-754 doubles in
/// space-major/time-minor order.  Round trips are bit-exact.
void write_field(const Field& field, const std::filesystem::path& manifest_path,
                 const std::string& name = "field");

Field read_field(const std::filesystem::path& manifest_path);

/// Name recorded in the manifest, returned alongside the field when needed.
std::string read_field_name(const std::filesystem::path& manifest_path);

} // namespace steklov
