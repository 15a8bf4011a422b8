#pragma once

#include <cmath>
#include <cstddef>

#include "entspec/grid.hpp"

namespace entspec {

enum class Correlation { Correlated, AntiCorrelated, Uncorrelated };

const char* to_string(Correlation c) noexcept;

// Gaussian PDC photon pair.  Central frequencies and the sum/difference
// bandwidths are all in eV; positivity is enforced at construction.
class PhotonPairSource {
public:
    PhotonPairSource(double omega_s0, double omega_i0, double sigma_p, double sigma_m);

    // Bandwidths in fs^-1.
    static PhotonPairSource from_fs_bandwidths(double omega_s0, double omega_i0, double sigma_p_fs,
                                               double sigma_m_fs);
    // From the central sum and difference frequencies, omega_- = omega_s0 - omega_i0.
    static PhotonPairSource from_sum_difference(double omega_plus, double omega_minus, double sigma_p,
                                                double sigma_m);

    double omega_s0() const noexcept { return omega_s0_; }
    double omega_i0() const noexcept { return omega_i0_; }
    double sigma_p() const noexcept { return sigma_p_; }
    double sigma_m() const noexcept { return sigma_m_; }
    double omega_plus() const noexcept { return omega_s0_ + omega_i0_; }
    double omega_minus() const noexcept { return omega_s0_ - omega_i0_; }

    bool operator==(const PhotonPairSource&) const = default;

private:
    double omega_s0_;
    double omega_i0_;
    double sigma_p_;
    double sigma_m_;
};

// f(x) = exp(-x^2)
inline double gaussian(double x) noexcept { return std::exp(-x * x); }

// Joint spectral amplitude (eV^-1).  Real and positive: the model carries no phase.
double jsa(const PhotonPairSource& src, double omega_s, double omega_i);
// |jsa|^2 (eV^-2); integrates to one over the plane.
double jsi(const PhotonPairSource& src, double omega_s, double omega_i);

Correlation correlation_class(const PhotonPairSource& src);

struct AxisRange {
    double min;
    double max;
    std::size_t count;
};

// jsi on the tensor grid s_range x i_range (signal frequency = rows).
// Throws ConfigError for count < 2 or max <= min.
Grid jsi_grid(const PhotonPairSource& src, const AxisRange& s_range, const AxisRange& i_range);

}  // namespace entspec
