#pragma once

#include <complex>

#include "entspec/photon_source.hpp"
#include "entspec/three_level.hpp"

// Molecular (displaced-oscillator) model of the two signals: one
// high-frequency mode producing a Poissonian vibronic progression and a
// quadratic dephasing D~ from the low-frequency bath.

namespace entspec {

struct VibrationalMode {
    double omega_j;         // eV
    double huang_rhys;      // F_j, dimensionless
    double low_freq_decay;  // D~, fs^-2 (already contains k_B T omega_j D / hbar)
    double lambda = 0.0;    // d_j^2 / 2, only used by lineshape_exact

    void validate() const;
};

struct VibronicSystem {
    double omega_eg;   // eV, TPA pathway
    double omega_fe;   // eV
    double omega_eg1;  // eV, Raman pathway
    double omega_eg2;  // eV
    double mu_eg;      // Debye
    double mu_fe;
    double mu_eg1;
    double mu_eg2;
    VibrationalMode mode;
    double temperature = 295.0;  // K

    double omega_fg() const noexcept { return omega_eg + omega_fe; }
    ThreeLevelTPA tpa_pathway() const { return {omega_eg, omega_fe, mu_eg, mu_fe}; }
    ThreeLevelRaman raman_pathway() const { return {omega_eg1, omega_eg2, mu_eg1, mu_eg2}; }
    void validate() const;
};

// Moves the system to a new temperature, scaling D~ proportionally.
VibronicSystem at_temperature(const VibronicSystem& sys, double temperature);

// lambda^2 [coth(beta hbar w / 2)(1 - cos wt) + i(sin wt - wt)], t in fs.
std::complex<double> lineshape_exact(const VibrationalMode& mode, double t, double temperature);
// -D~ t^2
double lineshape_low(const VibrationalMode& mode, double t);
// F (1 - exp(-i w t))
std::complex<double> lineshape_high(const VibrationalMode& mode, double t);

// -D~ u^2 - F (1 - exp(i w u)), u = t1 - t3 in fs
std::complex<double> phi_egeg(const VibrationalMode& mode, double u);
// F (exp(i w dt) - 1), dt = t3 - t1 in fs
std::complex<double> phi_efeg(const VibrationalMode& mode, double dt);

// Poisson weight S_n = e^-F F^n / n!.  DomainError for F < 0 or n < 0.
double franck_condon(double huang_rhys, int n);
double log_franck_condon(double huang_rhys, int n);

constexpr int kDefaultNMax = 30;

// Detunings entering the vibronic sums (eV).
double delta_tpa(const VibronicSystem& sys, const PhotonPairSource& src);
double delta_srs(const VibronicSystem& sys, const PhotonPairSource& src);

// Natural logs of the signals; the sums are accumulated with log-sum-exp so
// far-detuned points stay representable.
double log_p_tpa_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max = kDefaultNMax);
double log_p_srs_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max = kDefaultNMax,
                          bool anti_stokes = false);

double p_tpa_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max = kDefaultNMax);
// anti_stokes swaps the signal/idler roles (omega_- -> -omega_-), which gives the
// mirror side peaks at negative omega_-.  DomainError for D~ = 0.
double p_srs_vibronic(const VibronicSystem& sys, const PhotonPairSource& src, int n_max = kDefaultNMax,
                      bool anti_stokes = false);

// ln(P_TPA / P_SRS).  EvaluationError when the SRS intensity vanishes.
double log_ratio_vibronic(const VibronicSystem& sys, const PhotonPairSource& src_tpa,
                          const PhotonPairSource& src_srs, int n_max = kDefaultNMax, bool anti_stokes = false);
double ratio_vibronic(const VibronicSystem& sys, const PhotonPairSource& src_tpa, const PhotonPairSource& src_srs,
                      int n_max = kDefaultNMax, bool anti_stokes = false);

}  // namespace entspec
