#include "steklov/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace steklov {

namespace {

using nlohmann::ordered_json;

void write_doubles_le(std::ostream& out, const std::vector<double>& values) {
    std::vector<unsigned char> buf(values.size() * 8);
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto bits = std::bit_cast<std::uint64_t>(values[i]);
        for (int b = 0; b < 8; ++b) {
            buf[i * 8 + b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xffu);
        }
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
}

std::vector<double> read_doubles_le(std::istream& in, std::size_t count) {
    std::vector<unsigned char> buf(count * 8);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
        throw io_error("field data file shorter than the grid product");
    }
    // Any trailing payload means the manifest and data disagree.
    if (in.peek() != std::char_traits<char>::eof()) {
        throw io_error("field data file longer than the grid product");
    }
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t bits = 0;
        for (int b = 7; b >= 0; --b) {
            bits = (bits << 8) | buf[i * 8 + static_cast<std::size_t>(b)];
        }
        values[i] = std::bit_cast<double>(bits);
    }
    return values;
}

ordered_json load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw io_error("cannot open manifest " + manifest_path.string());
    ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("malformed manifest " + manifest_path.string() + ": " + e.what());
    }
    return doc;
}

} // namespace

void write_field(const Field& field, const std::filesystem::path& manifest_path,
                 const std::string& name) {
    validate_field(field);
    if (field.time.n < 2) {
        throw std::invalid_argument("write_field: time grid needs at least 2 points");
    }

    std::filesystem::path data_path = manifest_path;
    data_path.replace_extension(".f64");

    ordered_json doc;
    doc["name"] = name;
    doc["space"] = {{"ndim", field.space.ndim()},
                    {"shape", field.space.shape},
                    {"spacing", field.space.spacing},
                    {"origin", field.space.origin}};
    doc["time"] = {{"t0", field.time.t0}, {"dt", field.time.dt}, {"n", field.time.n}};
    doc["data"] = data_path.filename().string();

    {
        std::ofstream out(data_path, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open data file " + data_path.string());
        write_doubles_le(out, field.values);
        if (!out) throw io_error("write failed for " + data_path.string());
    }
    {
        std::ofstream out(manifest_path, std::ios::trunc);
        if (!out) throw io_error("cannot open manifest " + manifest_path.string());
        out << doc.dump(2) << "\n";
        if (!out) throw io_error("write failed for " + manifest_path.string());
    }
}

Field read_field(const std::filesystem::path& manifest_path) {
    const ordered_json doc = load_manifest(manifest_path);
    Field field;
    try {
        const auto& js = doc.at("space");
        const auto shape = js.at("shape").get<std::vector<std::size_t>>();
        const auto spacing = js.at("spacing").get<std::vector<double>>();
        const auto origin = js.at("origin").get<std::vector<double>>();
        if (js.contains("ndim") && js.at("ndim").get<std::size_t>() != shape.size()) {
            throw io_error("manifest ndim disagrees with shape length");
        }
        field.space = SpaceGrid(shape, spacing, origin);

        const auto& jt = doc.at("time");
        field.time = TimeGrid(jt.at("t0").get<double>(), jt.at("dt").get<double>(),
                              jt.at("n").get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
        throw io_error("malformed manifest " + manifest_path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw io_error("invalid grids in manifest " + manifest_path.string() + ": " + e.what());
    }
    if (field.time.n < 2) {
        throw io_error("manifest time grid needs at least 2 points");
    }

    std::filesystem::path data_path;
    try {
        data_path = manifest_path.parent_path() / doc.at("data").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw io_error("malformed manifest " + manifest_path.string() + ": " + e.what());
    }
    std::ifstream in(data_path, std::ios::binary);
    if (!in) throw io_error("cannot open data file " + data_path.string());
    field.values = read_doubles_le(in, field.value_count());

    try {
        validate_field(field);
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("invalid field payload: ") + e.what());
    }
    return field;
}

std::string read_field_name(const std::filesystem::path& manifest_path) {
    const ordered_json doc = load_manifest(manifest_path);
    if (!doc.contains("name")) return "field";
    return doc.at("name").get<std::string>();
}

} // namespace steklov
