#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entspec/photon_source.hpp"
#include "entspec/vibronic.hpp"

namespace entspec {

enum class Model { ThreeLevel, Vibronic };
enum class Observable { Tpa, Srs, Ratio, Jsi };
enum class AxisScale { Linear, Log };

const char* to_string(Model m) noexcept;
const char* to_string(Observable o) noexcept;

// A swept parameter.  `path` names a numeric field (see parameter_paths());
// min/max are in the path's documented unit.
struct Axis {
    std::string path;
    double min;
    double max;
    std::size_t count;
    AxisScale scale = AxisScale::Linear;

    std::vector<double> values() const;
    // "path [unit]"
    std::string label() const;
};

struct ParameterPath {
    std::string path;
    std::string unit;
    std::string description;
};

// Every path an axis (or a `point --set`) may name.
const std::vector<ParameterPath>& parameter_paths();

struct SweepConfig {
    Model model;
    Observable observable;
    // The three-level model reads only the electronic fields.
    VibronicSystem system;
    PhotonPairSource source_tpa;
    PhotonPairSource source_srs;
    bool shared_source;
    Axis axis1;
    std::optional<Axis> axis2;
    int n_max = kDefaultNMax;
    bool log10_output = false;
    bool anti_stokes = false;
    // Temperature sweeps rescale D~ proportionally from `system.temperature_K`.
    bool decay_follows_temperature = false;

    // Canonical document with defaults filled in, input units kept.  This is
    // what gets hashed and embedded in grid metadata.
    nlohmann::json snapshot;
};

// Parses and validates a JSON sweep document.  Unknown keys are rejected.
// Throws ConfigError carrying line/column for syntax errors and the key path
// for validation errors.
SweepConfig parse_config(std::string_view document);
SweepConfig parse_config(const nlohmann::json& document);
inline SweepConfig parse_config(const std::string& document) { return parse_config(std::string_view(document)); }
inline SweepConfig parse_config(const char* document) { return parse_config(std::string_view(document)); }

// 64-bit FNV-1a over the canonical dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& snapshot);

}  // namespace entspec
