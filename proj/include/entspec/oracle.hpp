#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "entspec/photon_source.hpp"
#include "entspec/quadrature.hpp"

// Brute-force validators kept independent of the closed forms they check.

namespace entspec::oracle {

// D(t) = exp(-t^2) \int_0^t exp(x^2) dx, absolute error < 1e-12.
double dawson(double t);

// P\int exp(-((x - center)/sigma)^2) / (x - pole) dx via the Hilbert transform
// of the Gaussian: -2 sqrt(pi) D((pole - center)/sigma).
double pv_gaussian_exact(double center, double pole, double sigma);

// The same principal value by symmetric excision: the two-sided integral with
// the interval (pole - eps, pole + eps) removed, extrapolated to eps -> 0 from
// eps in {1e-2, 1e-3, 1e-4} sigma.
double pv_quadrature(double center, double pole, double sigma, const QuadratureSpec& spec = {});

// \int\int |amplitude(ws, wi)|^2 over [ws0 +- W] x [wi0 +- W] with
// W = window_sigmas * sqrt(sigma_p^2 + sigma_m^2).
double jsi_integral(const PhotonPairSource& src, const std::function<double(double, double)>& amplitude,
                    double window_sigmas, const QuadratureSpec& spec = {});

// JSA normalisation over +-6 combined bandwidths.
double jsa_norm(const PhotonPairSource& src, const QuadratureSpec& spec = {});

struct PvErrorRow {
    double t;
    double approx;
    double exact;    // |exact principal value|
    double rel_err;  // |approx - exact| / exact, 0 where both vanish
};

// Compares pv_gaussian_approx against the Dawson principal value at
// omega_all = t * sigma.  Characterisation only, no pass/fail.
std::vector<PvErrorRow> pv_approx_error_report(double sigma, const std::vector<double>& t_grid);

// CSV with header t,approx,exact,rel_err
void write_pv_report_csv(const std::vector<PvErrorRow>& rows, std::ostream& out);

}  // namespace entspec::oracle
