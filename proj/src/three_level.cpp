#include "entspec/three_level.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entspec/errors.hpp"

namespace entspec {

namespace {

void require_positive(double v, const char* type, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(type) + ": " + name + " must be positive, got " + std::to_string(v));
    }
}

double square(double x) { return x * x; }

}  // namespace

void ThreeLevelTPA::validate() const {
    require_positive(omega_eg, "ThreeLevelTPA", "omega_eg");
    require_positive(omega_fe, "ThreeLevelTPA", "omega_fe");
    require_positive(mu_eg, "ThreeLevelTPA", "mu_eg");
    require_positive(mu_fe, "ThreeLevelTPA", "mu_fe");
}

void ThreeLevelRaman::validate() const {
    require_positive(omega_eg1, "ThreeLevelRaman", "omega_eg1");
    require_positive(omega_eg2, "ThreeLevelRaman", "omega_eg2");
    require_positive(mu_eg1, "ThreeLevelRaman", "mu_eg1");
    require_positive(mu_eg2, "ThreeLevelRaman", "mu_eg2");
}

DetuningSet DetuningSet::from_sources(const ThreeLevelTPA& tpa, const ThreeLevelRaman& raman,
                                      const PhotonPairSource& src_tpa, const PhotonPairSource& src_srs) {
    return {src_tpa.omega_i0() - tpa.omega_eg, src_tpa.omega_s0() - tpa.omega_fe,
            src_srs.omega_i0() - raman.omega_eg1, src_srs.omega_s0() - raman.omega_eg2};
}

double omega_all_tpa(const ThreeLevelTPA& sys, const PhotonPairSource& src) {
    return 0.5 * (src.omega_i0() + sys.omega_fe - sys.omega_eg - src.omega_s0());
}

double omega_all_srs(const ThreeLevelRaman& sys, const PhotonPairSource& src) {
    return 0.5 * (src.omega_plus() - sys.omega_eg1 - sys.omega_eg2);
}

double pv_gaussian_approx(double omega_all, double sigma_m) {
    const double t = omega_all / sigma_m;
    return std::exp(-t * t) * square(2.0 * t);
}

std::complex<double> tpa_amplitude(const ThreeLevelTPA& sys, const PhotonPairSource& src) {
    using namespace std::complex_literals;
    const double w_all = omega_all_tpa(sys, src);
    const double sum_envelope = gaussian((sys.omega_fg() - src.omega_plus()) / (2.0 * src.sigma_p()));
    const std::complex<double> bracket =
        -1i * std::numbers::pi * gaussian(w_all / src.sigma_m()) + pv_gaussian_approx(w_all, src.sigma_m());
    return 2.0 * std::numbers::pi * sys.mu_eg * sys.mu_fe * sum_envelope * bracket;
}

double p_tpa_3lvl(const ThreeLevelTPA& sys, const PhotonPairSource& src) {
    return std::norm(tpa_amplitude(sys, src));
}

double p_tpa_form(const ThreeLevelTPA& sys, const PhotonPairSource& src) {
    return gaussian((sys.omega_fg() - src.omega_plus()) / (std::numbers::sqrt2 * src.sigma_p())) *
           gaussian(std::numbers::sqrt2 * omega_all_tpa(sys, src) / src.sigma_m());
}

double p_srs_3lvl(const ThreeLevelRaman& sys, const PhotonPairSource& src) {
    return gaussian((sys.omega_eg2 - sys.omega_eg1 - src.omega_minus()) / (std::numbers::sqrt2 * src.sigma_m())) *
           gaussian(std::numbers::sqrt2 * omega_all_srs(sys, src) / src.sigma_p());
}

double dipole_ratio(const ThreeLevelTPA& tpa, const ThreeLevelRaman& raman) {
    const double denom = raman.mu_eg2 * raman.mu_eg1;
    if (denom == 0.0) throw DomainError("dipole_ratio: Raman transition dipole is zero");
    return square((tpa.mu_eg * tpa.mu_fe) / denom);
}

double ratio_3lvl(const ThreeLevelTPA& tpa, const ThreeLevelRaman& raman, const PhotonPairSource& src_tpa,
                  const PhotonPairSource& src_srs, const DetuningSet& det) {
    const double bandwidths =
        (src_srs.sigma_m() * src_srs.sigma_p()) / (src_tpa.sigma_m() * src_tpa.sigma_p());
    // Resonance term: sum-frequency mismatch of ETPA against the Raman-shift
    // mismatch of ESRS.
    const double resonance = -square(tpa.omega_fg() - src_tpa.omega_plus()) / (2.0 * square(src_tpa.sigma_p())) +
                             square(raman.omega_eg2 - raman.omega_eg1 - src_srs.omega_minus()) /
                                 (2.0 * square(src_srs.sigma_m()));
    const double detuning = -square(det.d_eg - det.d_fe) / (2.0 * square(src_tpa.sigma_m())) +
                            square(det.d_eg1 + det.d_eg2) / (2.0 * square(src_srs.sigma_p()));
    return dipole_ratio(tpa, raman) * bandwidths * std::exp(resonance + detuning);
}

}  // namespace entspec
