#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entspec/config.hpp"

namespace entspec {

// Pyrene parameters used by every molecular preset.
namespace pyrene {
inline constexpr double mu_eg = 4.35;      // D
inline constexpr double mu_fe = 6.99;      // D
inline constexpr double omega_eg = 3.9;    // eV
inline constexpr double omega_fe = 3.6;    // eV
inline constexpr double omega_eg1 = 3.9;   // eV
inline constexpr double omega_eg2 = 4.07;  // eV, omega_eg1 + omega_eg2 = 7.97
inline constexpr double huang_rhys = 1.0;
inline constexpr double omega_j = 0.17;    // eV
inline constexpr double decay = 0.536;     // fs^-2
inline constexpr double temperature = 295.0;

// Peak positions the per-process sources are tuned to (eV).
inline constexpr double tpa_omega_plus = 7.5;
inline constexpr double tpa_omega_minus = -0.3;
inline constexpr double srs_omega_plus = 8.14;
inline constexpr double srs_omega_minus = 0.17;

VibronicSystem system();
}  // namespace pyrene

const std::vector<std::string>& figure_names();

// The preset as a config document, so it can be printed, edited and re-run.
nlohmann::json figure_document(std::string_view name);

// Throws ConfigError for unknown names.
SweepConfig figure_preset(std::string_view name);

}  // namespace entspec
