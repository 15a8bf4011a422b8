#include "entspec/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "entspec/errors.hpp"
#include "entspec/grid_io.hpp"
#include "entspec/three_level.hpp"

namespace entspec::oracle {

namespace {

// Below this the positive-term series is used; above it the asymptotic
// expansion is already accurate to well under 1e-15.
constexpr double kDawsonSeriesLimit = 6.0;

double dawson_series(double t) {
    // exp(-t^2) sum_n t^(2n+1) / (n! (2n+1)); all terms positive.
    const double t2 = t * t;
    double power = t;  // t^(2n+1) / n!
    double sum = t;
    for (int n = 1; n < 500; ++n) {
        power *= t2 / n;
        const double term = power / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::exp(-t2) * sum;
}

double dawson_asymptotic(double t) {
    // 1/(2t) sum_k (2k-1)!! / (2t^2)^k, truncated at the smallest term.
    const double inv = 1.0 / (2.0 * t * t);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (2.0 * k - 1.0) * inv;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum / (2.0 * t);
}

}  // namespace

double dawson(double t) {
    if (t < 0.0) return -dawson(-t);
    if (t == 0.0) return 0.0;
    return t < kDawsonSeriesLimit ? dawson_series(t) : dawson_asymptotic(t);
}

double pv_gaussian_exact(double center, double pole, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("pv_gaussian_exact: sigma must be positive");
    return -2.0 * std::sqrt(std::numbers::pi) * dawson((pole - center) / sigma);
}

double pv_quadrature(double center, double pole, double sigma, const QuadratureSpec& spec) {
    if (!(sigma > 0.0)) throw DomainError("pv_quadrature: sigma must be positive");
    // In u = (x - center)/sigma the integral is P\int exp(-u^2)/(u - a) du.
    const double a = (pole - center) / sigma;
    const double upper = std::abs(a) + 10.0;
    // Both excised sides folded onto s = |u - a| in [eps, upper].
    const auto folded = [a](double s) { return (std::exp(-(a + s) * (a + s)) - std::exp(-(a - s) * (a - s))) / s; };

    constexpr std::array<double, 3> eps = {1e-2, 1e-3, 1e-4};
    std::array<double, 3> excised{};
    for (std::size_t k = 0; k < eps.size(); ++k) {
        std::vector<double> breaks = {eps[k]};
        if (std::abs(a) > eps[k]) breaks.push_back(std::abs(a));
        breaks.push_back(upper);
        excised[k] = integrate(folded, breaks, spec).value;
    }

    // The excision error is odd in eps: I(eps) = PV + c1 eps + c3 eps^3 + ...
    // Solve for PV with weights w satisfying sum w = 1, sum w eps = 0, sum w eps^3 = 0.
    std::array<double, 3> w{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double e_j = eps[(i + 1) % 3];
        const double e_k = eps[(i + 2) % 3];
        const double e_i = eps[i];
        // Lagrange-type weight for the basis {1, e, e^3}
        w[i] = (e_j * e_k * (e_j + e_k)) / ((e_i - e_j) * (e_i - e_k) * (e_i + e_j + e_k));
    }
    double pv = 0.0;
    for (std::size_t k = 0; k < 3; ++k) pv += w[k] * excised[k];
    return pv;
}

double jsi_integral(const PhotonPairSource& src, const std::function<double(double, double)>& amplitude,
                    double window_sigmas, const QuadratureSpec& spec) {
    const double p2 = src.sigma_p() * src.sigma_p();
    const double m2 = src.sigma_m() * src.sigma_m();
    const double half_width = window_sigmas * std::sqrt(p2 + m2);
    // For fixed signal detuning the integrand is a Gaussian ridge in the idler
    // detuning, centred at ridge_slope * detune_s with this width.
    const double ridge_slope = (p2 - m2) / (p2 + m2);
    const double ridge_width = src.sigma_p() * src.sigma_m() / std::sqrt(p2 + m2);

    const double s_lo = src.omega_s0() - half_width;
    const double s_hi = src.omega_s0() + half_width;
    const double i_lo = src.omega_i0() - half_width;
    const double i_hi = src.omega_i0() + half_width;

    const auto inner = [&](double ws) {
        const double centre = src.omega_i0() + ridge_slope * (ws - src.omega_s0());
        std::vector<double> breaks = {i_lo};
        for (double k : {-8.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0}) {
            const double b = centre + k * ridge_width;
            if (b > breaks.back() && b < i_hi) breaks.push_back(b);
        }
        breaks.push_back(i_hi);
        const auto row = [&](double wi) {
            const double a = amplitude(ws, wi);
            return a * a;
        };
        return integrate(row, breaks, spec).value;
    };

    std::vector<double> outer_breaks;
    constexpr int kOuterPieces = 12;
    for (int k = 0; k <= kOuterPieces; ++k) outer_breaks.push_back(s_lo + (s_hi - s_lo) * k / kOuterPieces);
    outer_breaks.back() = s_hi;
    return integrate(inner, outer_breaks, spec).value;
}

double jsa_norm(const PhotonPairSource& src, const QuadratureSpec& spec) {
    return jsi_integral(src, [&src](double ws, double wi) { return jsa(src, ws, wi); }, 6.0, spec);
}

std::vector<PvErrorRow> pv_approx_error_report(double sigma, const std::vector<double>& t_grid) {
    std::vector<PvErrorRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        const double approx = pv_gaussian_approx(t * sigma, sigma);
        const double exact = std::abs(pv_gaussian_exact(0.0, t * sigma, sigma));
        double rel = 0.0;
        if (exact > 0.0) {
            rel = std::abs(approx - exact) / exact;
        } else if (approx != 0.0) {
            rel = std::numeric_limits<double>::infinity();
        }
        rows.push_back({t, approx, exact, rel});
    }
    return rows;
}

void write_pv_report_csv(const std::vector<PvErrorRow>& rows, std::ostream& out) {
    out << "t,approx,exact,rel_err\n";
    for (const auto& r : rows) {
        out << format_double(r.t) << ',' << format_double(r.approx) << ',' << format_double(r.exact) << ','
            << format_double(r.rel_err) << '\n';
    }
}

}  // namespace entspec::oracle
