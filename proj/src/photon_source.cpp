#include "entspec/photon_source.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entspec/errors.hpp"
#include "entspec/units.hpp"

namespace entspec {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("PhotonPairSource: ") + name + " must be positive and finite, got " +
                          std::to_string(v));
    }
}

std::vector<double> linspace(const AxisRange& r) {
    std::vector<double> out(r.count);
    const double step = (r.max - r.min) / static_cast<double>(r.count - 1);
    for (std::size_t k = 0; k < r.count; ++k) out[k] = r.min + step * static_cast<double>(k);
    out.back() = r.max;
    return out;
}

}  // namespace

const char* to_string(Correlation c) noexcept {
    switch (c) {
        case Correlation::Correlated: return "correlated";
        case Correlation::AntiCorrelated: return "anti-correlated";
        case Correlation::Uncorrelated: return "uncorrelated";
    }
    return "?";
}

PhotonPairSource::PhotonPairSource(double omega_s0, double omega_i0, double sigma_p, double sigma_m)
    : omega_s0_(omega_s0), omega_i0_(omega_i0), sigma_p_(sigma_p), sigma_m_(sigma_m) {
    require_positive(omega_s0, "omega_s0");
    require_positive(omega_i0, "omega_i0");
    require_positive(sigma_p, "sigma_p");
    require_positive(sigma_m, "sigma_m");
}

PhotonPairSource PhotonPairSource::from_fs_bandwidths(double omega_s0, double omega_i0, double sigma_p_fs,
                                                      double sigma_m_fs) {
    return {omega_s0, omega_i0, units::angular_fs_to_ev(sigma_p_fs), units::angular_fs_to_ev(sigma_m_fs)};
}

PhotonPairSource PhotonPairSource::from_sum_difference(double omega_plus, double omega_minus, double sigma_p,
                                                       double sigma_m) {
    return {0.5 * (omega_plus + omega_minus), 0.5 * (omega_plus - omega_minus), sigma_p, sigma_m};
}

double jsa(const PhotonPairSource& src, double omega_s, double omega_i) {
    const double detune_s = omega_s - src.omega_s0();
    const double detune_i = omega_i - src.omega_i0();
    const double norm = 1.0 / std::sqrt(std::numbers::pi * src.sigma_m() * src.sigma_p());
    return norm * gaussian((detune_s + detune_i) / (2.0 * src.sigma_p())) *
           gaussian((detune_s - detune_i) / (2.0 * src.sigma_m()));
}

double jsi(const PhotonPairSource& src, double omega_s, double omega_i) {
    const double a = jsa(src, omega_s, omega_i);
    return a * a;
}

Correlation correlation_class(const PhotonPairSource& src) {
    const double p = src.sigma_p();
    const double m = src.sigma_m();
    if (std::abs(p - m) <= 1e-12 * std::max(p, m)) return Correlation::Uncorrelated;
    return p > m ? Correlation::Correlated : Correlation::AntiCorrelated;
}

Grid jsi_grid(const PhotonPairSource& src, const AxisRange& s_range, const AxisRange& i_range) {
    for (const auto* r : {&s_range, &i_range}) {
        if (r->count < 2) throw ConfigError("grid axis needs at least 2 points", "count");
        if (!(r->max > r->min)) throw ConfigError("grid axis needs max > min", "max");
    }
    Grid grid;
    grid.axis1_label = "omega_s [eV]";
    grid.axis2_label = "omega_i [eV]";
    grid.axis1_values = linspace(s_range);
    grid.axis2_values = linspace(i_range);
    grid.values.reserve(s_range.count * i_range.count);
    for (double ws : grid.axis1_values) {
        for (double wi : grid.axis2_values) grid.values.push_back(jsi(src, ws, wi));
    }
    grid.metadata["observable"] = "jsi";
    grid.metadata["correlation"] = to_string(correlation_class(src));
    return grid;
}

}  // namespace entspec
