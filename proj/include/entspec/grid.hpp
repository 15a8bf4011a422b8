#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace entspec {

// Labelled 2-D array of signal values; the common output of every sweep.
// values are row-major with axis1 as rows.  One-dimensional sweeps carry a
// single-valued second axis.
struct Grid {
    std::string axis1_label;
    std::string axis2_label;
    std::vector<double> axis1_values;
    std::vector<double> axis2_values;
    std::vector<double> values;
    nlohmann::json metadata = nlohmann::json::object();

    std::size_t rows() const noexcept { return axis1_values.size(); }
    std::size_t cols() const noexcept { return axis2_values.size(); }

    double at(std::size_t row, std::size_t col) const { return values.at(row * cols() + col); }

    // Row/column of the largest value (first occurrence in row-major order).
    std::pair<std::size_t, std::size_t> argmax() const;
};

}  // namespace entspec
