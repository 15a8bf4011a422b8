#include "entspec/vibronic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entspec/errors.hpp"
#include "entspec/units.hpp"

namespace entspec {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

double square(double x) { return x * x; }

// log(sum exp(terms)), skipping -inf entries.
double log_sum_exp(const std::vector<double>& terms) {
    const double peak = *std::max_element(terms.begin(), terms.end());
    if (peak == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - peak);
    return peak + std::log(acc);
}

void require_n_max(int n_max) { require(n_max >= 0, "vibronic sum: n_max must be >= 0"); }

}  // namespace

void VibrationalMode::validate() const {
    require(omega_j > 0.0 && std::isfinite(omega_j), "VibrationalMode: omega_j must be positive");
    require(huang_rhys >= 0.0 && std::isfinite(huang_rhys), "VibrationalMode: huang_rhys must be >= 0");
    require(low_freq_decay >= 0.0 && std::isfinite(low_freq_decay),
            "VibrationalMode: low_freq_decay must be >= 0");
    require(std::isfinite(lambda), "VibrationalMode: lambda must be finite");
}

void VibronicSystem::validate() const {
    tpa_pathway().validate();
    raman_pathway().validate();
    mode.validate();
    require(temperature > 0.0 && std::isfinite(temperature), "VibronicSystem: temperature must be positive");
}

VibronicSystem at_temperature(const VibronicSystem& sys, double temperature) {
    require(temperature > 0.0, "at_temperature: temperature must be positive");
    VibronicSystem out = sys;
    out.mode.low_freq_decay = sys.mode.low_freq_decay * (temperature / sys.temperature);
    out.temperature = temperature;
    return out;
}

std::complex<double> lineshape_exact(const VibrationalMode& mode, double t, double temperature) {
    const double phase = units::ev_to_angular_fs(mode.omega_j) * t;
    const double coth = 1.0 / std::tanh(mode.omega_j / (2.0 * units::thermal_energy(temperature)));
    const double lambda2 = mode.lambda * mode.lambda;
    return lambda2 * std::complex<double>(coth * (1.0 - std::cos(phase)), std::sin(phase) - phase);
}

double lineshape_low(const VibrationalMode& mode, double t) { return -mode.low_freq_decay * t * t; }

std::complex<double> lineshape_high(const VibrationalMode& mode, double t) {
    const double phase = units::ev_to_angular_fs(mode.omega_j) * t;
    return mode.huang_rhys * (1.0 - std::polar(1.0, -phase));
}

std::complex<double> phi_egeg(const VibrationalMode& mode, double u) {
    const double phase = units::ev_to_angular_fs(mode.omega_j) * u;
    return -mode.low_freq_decay * u * u - mode.huang_rhys * (1.0 - std::polar(1.0, phase));
}

std::complex<double> phi_efeg(const VibrationalMode& mode, double dt) {
    const double phase = units::ev_to_angular_fs(mode.omega_j) * dt;
    return mode.huang_rhys * (std::polar(1.0, phase) - 1.0);
}

double log_franck_condon(double huang_rhys, int n) {
    require(huang_rhys >= 0.0, "franck_condon: Huang-Rhys factor must be >= 0");
    require(n >= 0, "franck_condon: n must be >= 0");
    if (huang_rhys == 0.0) return n == 0 ? 0.0 : kNegInf;
    return -huang_rhys + n * std::log(huang_rhys) - std::lgamma(n + 1.0);
}

double franck_condon(double huang_rhys, int n) { return std::exp(log_franck_condon(huang_rhys, n)); }

double delta_tpa(const VibronicSystem& sys, const PhotonPairSource& src) {
    return (src.omega_i0() - src.omega_s0()) + (sys.omega_fe - sys.omega_eg);
}

double delta_srs(const VibronicSystem& sys, const PhotonPairSource& src) {
    return src.omega_plus() - (sys.omega_eg1 + sys.omega_eg2);
}

double log_p_tpa_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max) {
    require_n_max(n_max);
    const double w = sys.mode.omega_j;
    const double plus_width = std::numbers::sqrt2 * src.sigma_p();
    const double minus_width = std::numbers::sqrt2 * src.sigma_m();
    const double detuning = delta_tpa(sys, src);
    const double sum_mismatch = src.omega_plus() - sys.omega_fg();

    std::vector<double> terms(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        terms[n] = log_franck_condon(sys.mode.huang_rhys, n) - square((sum_mismatch + n * w) / plus_width) -
                   square((n * w - detuning) / minus_width);
    }
    return 2.0 * std::log(sys.mu_eg * sys.mu_fe) + log_sum_exp(terms);
}

double log_p_srs_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max, bool anti_stokes) {
    require_n_max(n_max);
    const double decay = sys.mode.low_freq_decay;
    if (!(decay > 0.0)) {
        throw DomainError("p_srs_vibronic: low_freq_decay = 0 makes the ESRS prefactor singular");
    }
    const double w = sys.mode.omega_j;
    const double omega_minus = anti_stokes ? -src.omega_minus() : src.omega_minus();
    const double plus_width = std::numbers::sqrt2 * src.sigma_p();
    const double detuning = delta_srs(sys, src);
    const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);

    std::vector<double> terms(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        // sqrt(pi) / ((n w + omega_eg1) D~), the gap taken in fs^-1
        const double log_prefactor =
            log_sqrt_pi - std::log(units::ev_to_angular_fs(n * w + sys.omega_eg1)) - std::log(decay);
        terms[n] = log_franck_condon(sys.mode.huang_rhys, n) - square((omega_minus - n * w) / src.sigma_m()) +
                   log_prefactor - square((n * w - detuning) / plus_width);
    }
    return 2.0 * std::log(sys.mu_eg1 * sys.mu_eg2) + log_sum_exp(terms);
}

double p_tpa_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max) {
    return std::exp(log_p_tpa_vibronic(sys, src, n_max));
}

double p_srs_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max, bool anti_stokes) {
    return std::exp(log_p_srs_vibronic(sys, src, n_max, anti_stokes));
}

double log_ratio_vibronic(const VibronicSystem& sys, const PhotonPairSource& src_tpa,
                          const PhotonPairSource& src_srs, int n_max, bool anti_stokes) {
    const double log_tpa = log_p_tpa_vibronic(sys, src_tpa, n_max);
    const double log_srs = log_p_srs_vibronic(sys, src_srs, n_max, anti_stokes);
    if (log_srs == kNegInf) {
        std::ostringstream msg;
        msg << "ratio_vibronic: ESRS intensity vanishes (omega_+ = " << src_srs.omega_plus()
            << " eV, omega_- = " << src_srs.omega_minus() << " eV, F = " << sys.mode.huang_rhys << ")";
        throw EvaluationError(msg.str());
    }
    return log_tpa - log_srs;
}

double ratio_vibronic(const VibronicSystem& sys, const PhotonPairSource& src_tpa, const PhotonPairSource& src_srs,
                      int n_max, bool anti_stokes) {
    const double log_ratio = log_ratio_vibronic(sys, src_tpa, src_srs, n_max, anti_stokes);
    const double ratio = std::exp(log_ratio);
    if (!std::isfinite(ratio)) {
        std::ostringstream msg;
        msg << "ratio_vibronic: ratio overflows (ln ratio = " << log_ratio << ")";
        throw EvaluationError(msg.str());
    }
    return ratio;
}

}  // namespace entspec
