#pragma once

#include <complex>

#include "entspec/photon_source.hpp"

// Closed-form ETPA and ESRS probabilities for three-level systems.
//
// Single-process probabilities are in arbitrary units: the field prefactors
// (hbar omega / 2 eps0 c)^(1/2) of each photon cancel between the two
// processes, so only the dipole products are kept and only ratios are
// physical.

namespace entspec {

// g -> e -> f ladder; idler drives g->e, signal drives e->f.
struct ThreeLevelTPA {
    double omega_eg;  // eV
    double omega_fe;  // eV
    double mu_eg;     // Debye
    double mu_fe;     // Debye

    double omega_fg() const noexcept { return omega_eg + omega_fe; }
    void validate() const;
};

// g1 -> e -> g2 Lambda scheme; idler absorbed on g1->e, signal stimulates e->g2.
struct ThreeLevelRaman {
    double omega_eg1;  // eV
    double omega_eg2;  // eV
    double mu_eg1;     // Debye
    double mu_eg2;     // Debye

    void validate() const;
};

// Central-frequency detunings, eV.
struct DetuningSet {
    double d_eg;
    double d_fe;
    double d_eg1;
    double d_eg2;

    // The idler drives the first interaction of both processes.
    static DetuningSet from_sources(const ThreeLevelTPA& tpa, const ThreeLevelRaman& raman,
                                    const PhotonPairSource& src_tpa, const PhotonPairSource& src_srs);
};

// (omega_i0 + omega_fe - omega_eg - omega_s0) / 2
double omega_all_tpa(const ThreeLevelTPA& sys, const PhotonPairSource& src);
// (omega_+ - omega_eg1 - omega_eg2) / 2
double omega_all_srs(const ThreeLevelRaman& sys, const PhotonPairSource& src);

// Gaussian approximation to the principal-value integral over the
// intermediate-state denominator: exp(-(w/s)^2) (2w/s)^2.
double pv_gaussian_approx(double omega_all, double sigma_m);

// TPA transition amplitude, global propagation phase dropped.
std::complex<double> tpa_amplitude(const ThreeLevelTPA& sys, const PhotonPairSource& src);

// |tpa_amplitude|^2
double p_tpa_3lvl(const ThreeLevelTPA& sys, const PhotonPairSource& src);

// Proportional (probability-level) forms, without dipole or bandwidth factors.
double p_tpa_form(const ThreeLevelTPA& sys, const PhotonPairSource& src);
double p_srs_3lvl(const ThreeLevelRaman& sys, const PhotonPairSource& src);

// |mu_eg mu_fe / (mu_eg2 mu_eg1)|^2; DomainError if a Raman dipole is zero.
double dipole_ratio(const ThreeLevelTPA& tpa, const ThreeLevelRaman& raman);

// P_TPA / P_SRS for possibly different sources per process.  omega_+ enters
// from the TPA source and omega_- from the SRS source.
double ratio_3lvl(const ThreeLevelTPA& tpa, const ThreeLevelRaman& raman, const PhotonPairSource& src_tpa,
                  const PhotonPairSource& src_srs, const DetuningSet& det);

}  // namespace entspec
