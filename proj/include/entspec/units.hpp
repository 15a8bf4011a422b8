#pragma once

// Physical constants and the few unit conversions the signal models need.
// Internally every energy and angular frequency is carried in eV; bandwidths
// quoted in fs^-1 are converted on ingestion with omega[eV] = hbar * omega[fs^-1].
// Transition dipoles stay in Debye, since they only ever enter as ratios.

namespace entspec::units {

struct PhysicalConstants {
    static constexpr double hbar = 0.6582119569;   // eV fs
    static constexpr double kB = 8.617333262e-5;   // eV / K
    static constexpr double hc = 1239.8419;        // eV nm
};

constexpr double ev_to_angular_fs(double energy_ev) { return energy_ev / PhysicalConstants::hbar; }
constexpr double angular_fs_to_ev(double omega_fs) { return omega_fs * PhysicalConstants::hbar; }

// Photon wavelength for a given energy.  Throws DomainError for e <= 0.
double ev_to_nm(double energy_ev);
double nm_to_ev(double wavelength_nm);

// k_B T in eV.
constexpr double thermal_energy(double temperature_k) { return PhysicalConstants::kB * temperature_k; }

}  // namespace entspec::units
