#include "entspec/grid_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "entspec/errors.hpp"

namespace entspec {

namespace {

double parse_double(std::string_view text, std::size_t line) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw IoError("grid csv line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
    }
    return value;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

// Appends x to axis unless it repeats the last entry.
void push_unique(std::vector<double>& axis, double x) {
    if (axis.empty() || axis.back() != x) axis.push_back(x);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw IoError("format_double: conversion failed");
    return {buf, ptr};
}

void write_grid_csv(const Grid& grid, std::ostream& out) {
    out << "# axis1_label=" << grid.axis1_label << '\n';
    out << "# axis2_label=" << grid.axis2_label << '\n';
    for (const auto& [key, value] : grid.metadata.items()) {
        out << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    out << "axis1,axis2,value\n";
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        const std::string a1 = format_double(grid.axis1_values[r]);
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            out << a1 << ',' << format_double(grid.axis2_values[c]) << ',' << format_double(grid.at(r, c)) << '\n';
        }
    }
}

void write_grid_csv(const Grid& grid, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_grid_csv(grid, out);
    finish_write(out, path);
}

void write_grid_json(const Grid& grid, std::ostream& out) {
    nlohmann::json doc;
    doc["axis1_label"] = grid.axis1_label;
    doc["axis2_label"] = grid.axis2_label;
    doc["axis1_values"] = grid.axis1_values;
    doc["axis2_values"] = grid.axis2_values;
    doc["values"] = grid.values;
    doc["metadata"] = grid.metadata;
    out << doc.dump(2) << '\n';
}

void write_grid_json(const Grid& grid, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_grid_json(grid, out);
    finish_write(out, path);
}

Grid read_grid_csv(std::istream& in) {
    Grid grid;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<double> first_col;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.starts_with("# ")) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = line.substr(2, eq - 2);
            const std::string value = line.substr(eq + 1);
            if (key == "axis1_label") {
                grid.axis1_label = value;
            } else if (key == "axis2_label") {
                grid.axis2_label = value;
            } else {
                auto parsed = nlohmann::json::parse(value, nullptr, false);
                grid.metadata[key] = parsed.is_discarded() ? nlohmann::json(value) : parsed;
            }
            continue;
        }
        if (!header_seen) {
            if (line != "axis1,axis2,value") throw IoError("grid csv: missing 'axis1,axis2,value' header");
            header_seen = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw IoError("grid csv line " + std::to_string(line_no) + ": expected three columns");
        }
        const std::string_view view(line);
        const double a1 = parse_double(view.substr(0, c1), line_no);
        const double a2 = parse_double(view.substr(c1 + 1, c2 - c1 - 1), line_no);
        grid.values.push_back(parse_double(view.substr(c2 + 1), line_no));
        push_unique(grid.axis1_values, a1);
        if (grid.axis1_values.size() == 1) first_col.push_back(a2);
    }
    if (!header_seen) throw IoError("grid csv: no data header found");
    grid.axis2_values = std::move(first_col);
    if (grid.values.size() != grid.rows() * grid.cols()) throw IoError("grid csv: row count does not match axes");
    return grid;
}

Grid read_grid_csv(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return read_grid_csv(in);
}

Grid read_grid_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("grid json: ") + e.what());
    }
    Grid grid;
    try {
        grid.axis1_label = doc.at("axis1_label").get<std::string>();
        grid.axis2_label = doc.at("axis2_label").get<std::string>();
        grid.axis1_values = doc.at("axis1_values").get<std::vector<double>>();
        grid.axis2_values = doc.at("axis2_values").get<std::vector<double>>();
        grid.values = doc.at("values").get<std::vector<double>>();
        grid.metadata = doc.value("metadata", nlohmann::json::object());
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("grid json: ") + e.what());
    }
    if (grid.values.size() != grid.rows() * grid.cols()) throw IoError("grid json: values do not match axes");
    return grid;
}

Grid read_grid_json(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return read_grid_json(in);
}

}  // namespace entspec
