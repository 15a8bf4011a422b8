#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "entspec/grid.hpp"

namespace entspec {

// '#'-prefixed key=value metadata lines, a header `axis1,axis2,value`, then
// one row per point in row-major order.  Numbers use the shortest decimal
// that round-trips.
void write_grid_csv(const Grid& grid, std::ostream& out);
void write_grid_csv(const Grid& grid, const std::filesystem::path& path);

// One JSON document mirroring Grid.
void write_grid_json(const Grid& grid, std::ostream& out);
void write_grid_json(const Grid& grid, const std::filesystem::path& path);

Grid read_grid_csv(std::istream& in);
Grid read_grid_csv(const std::filesystem::path& path);
Grid read_grid_json(std::istream& in);
Grid read_grid_json(const std::filesystem::path& path);

// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace entspec
