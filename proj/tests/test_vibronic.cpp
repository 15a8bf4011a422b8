#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "entspec/errors.hpp"
#include "entspec/presets.hpp"
#include "entspec/units.hpp"
#include "entspec/vibronic.hpp"

using namespace entspec;

namespace {

const double pi = std::numbers::pi;

// Direct linear-space sums, written out from the closed forms.
double tpa_direct(const VibronicSystem& s, const PhotonPairSource& src, int n_max) {
    double sum = 0.0;
    double weight = std::exp(-s.mode.huang_rhys);
    const double delta = (src.omega_i0() - src.omega_s0()) + (s.omega_fe - s.omega_eg);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) weight *= s.mode.huang_rhys / n;
        const double a = (src.omega_plus() - s.omega_fg() + n * s.mode.omega_j) / (std::sqrt(2.0) * src.sigma_p());
        const double b = (n * s.mode.omega_j - delta) / (std::sqrt(2.0) * src.sigma_m());
        sum += weight * std::exp(-a * a) * std::exp(-b * b);
    }
    return std::pow(s.mu_eg * s.mu_fe, 2) * sum;
}

double srs_direct(const VibronicSystem& s, const PhotonPairSource& src, int n_max) {
    double sum = 0.0;
    double weight = std::exp(-s.mode.huang_rhys);
    const double delta = src.omega_plus() - (s.omega_eg1 + s.omega_eg2);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) weight *= s.mode.huang_rhys / n;
        const double a = (src.omega_minus() - n * s.mode.omega_j) / src.sigma_m();
        const double gap_fs = (n * s.mode.omega_j + s.omega_eg1) / 0.6582119569;
        const double b = (n * s.mode.omega_j - delta) / (std::sqrt(2.0) * src.sigma_p());
        sum += weight * std::exp(-a * a) * std::sqrt(pi) / (gap_fs * s.mode.low_freq_decay) * std::exp(-b * b);
    }
    return std::pow(s.mu_eg1 * s.mu_eg2, 2) * sum;
}

VibronicSystem with_f(double f) {
    VibronicSystem s = pyrene::system();
    s.mode.huang_rhys = f;
    return s;
}

const PhotonPairSource kAnti = PhotonPairSource::from_fs_bandwidths(3.6, 3.9, 0.05, 0.3);
const PhotonPairSource kCorr = PhotonPairSource::from_sum_difference(8.14, 0.17, units::angular_fs_to_ev(0.3),
                                                                     units::angular_fs_to_ev(0.05));

}  // namespace

TEST_CASE("lineshape_exact") {
    VibrationalMode m{0.17, 1.0, 0.536, 0.8};
    CHECK(std::abs(lineshape_exact(m, 0.0, 295.0)) == 0.0);
    const double period = 2.0 * pi / units::ev_to_angular_fs(m.omega_j);
    const auto g = lineshape_exact(m, period, 295.0);
    CHECK(g.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(g.real()) < 1e-12);
    CHECK(g.imag() == doctest::Approx(-0.64 * 2.0 * pi).epsilon(1e-12));
    for (int i = 0; i < 200; ++i) CHECK(lineshape_exact(m, -20.0 + 0.2 * i, 150.0).real() >= 0.0);
}

TEST_CASE("lineshape_low") {
    VibrationalMode m{0.17, 1.0, 0.536};
    CHECK(lineshape_low(m, 0.0) == 0.0);
    CHECK(lineshape_low(m, 1.0) == doctest::Approx(-0.536).epsilon(1e-15));
    CHECK(lineshape_low(m, 2.6) == doctest::Approx(4.0 * lineshape_low(m, 1.3)).epsilon(1e-15));
}

TEST_CASE("lineshape_high") {
    VibrationalMode m{0.17, 1.3, 0.536};
    CHECK(std::abs(lineshape_high(m, 0.0)) == 0.0);
    const double half = pi / units::ev_to_angular_fs(m.omega_j);
    const auto g = lineshape_high(m, half);
    CHECK(g.real() == doctest::Approx(2.6).epsilon(1e-14));
    CHECK(std::abs(g.imag()) < 1e-12);
    for (int i = 0; i < 500; ++i) CHECK(std::abs(lineshape_high(m, -50.0 + 0.2 * i)) <= 2.6 + 1e-12);
}

TEST_CASE("phi_egeg") {
    VibrationalMode m{0.17, 1.0, 0.536};
    CHECK(std::abs(phi_egeg(m, 0.0)) == 0.0);
    for (int i = 0; i < 500; ++i) CHECK(phi_egeg(m, -25.0 + 0.1 * i).real() <= 0.0);
    VibrationalMode bare{0.17, 0.0, 0.536};
    for (double u : {-3.0, 0.5, 2.0}) {
        const auto p = phi_egeg(bare, u);
        CHECK(p.real() == doctest::Approx(-0.536 * u * u).epsilon(1e-15));
        CHECK(p.imag() == 0.0);
    }
}

TEST_CASE("phi_efeg") {
    VibrationalMode m{0.17, 1.2, 0.536};
    CHECK(std::abs(phi_efeg(m, 0.0)) == 0.0);
    for (int i = 0; i < 500; ++i) {
        const double mod = std::abs(std::exp(phi_efeg(m, -25.0 + 0.1 * i)));
        CHECK(mod <= 1.0 + 1e-15);
        CHECK(mod >= std::exp(-2.4) - 1e-15);
    }
    VibrationalMode bare{0.17, 0.0, 0.536};
    CHECK(std::abs(phi_efeg(bare, 3.0)) == 0.0);
}

TEST_CASE("franck_condon") {
    CHECK(franck_condon(1.0, 0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(franck_condon(0.0, 0) == 1.0);
    for (int n = 1; n < 5; ++n) CHECK(franck_condon(0.0, n) == 0.0);
    double sum = 0.0;
    for (int n = 0; n <= 30; ++n) sum += franck_condon(1.0, n);
    CHECK(std::abs(sum - 1.0) < 1e-12);
    // large n stays finite through lgamma
    CHECK(franck_condon(5.0, 150) > 0.0);
    CHECK(franck_condon(5.0, 150) < 1e-150);
    CHECK(log_franck_condon(5.0, 300) == doctest::Approx(-5.0 + 300 * std::log(5.0) - std::lgamma(301.0)));
    CHECK_THROWS_AS(franck_condon(-0.1, 0), DomainError);
    CHECK_THROWS_AS(franck_condon(1.0, -1), DomainError);
}

TEST_CASE("signals match direct sums") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> plus(7.0, 8.5);
    std::uniform_real_distribution<double> minus(-0.5, 0.5);
    std::uniform_real_distribution<double> bw(0.05, 0.5);
    std::uniform_real_distribution<double> f(0.0, 5.0);
    for (int k = 0; k < 100; ++k) {
        const VibronicSystem s = with_f(f(rng));
        const auto src = PhotonPairSource::from_fs_bandwidths(3.0, 3.0, bw(rng), bw(rng));
        const auto moved = PhotonPairSource::from_sum_difference(plus(rng), minus(rng), src.sigma_p(), src.sigma_m());
        CHECK(p_tpa_vibronic(s, moved) == doctest::Approx(tpa_direct(s, moved, 30)).epsilon(1e-12));
        CHECK(p_srs_vibronic(s, moved) == doctest::Approx(srs_direct(s, moved, 30)).epsilon(1e-12));
    }
}

TEST_CASE("p_srs_vibronic") {
    SUBCASE("F = 0 gives the Rayleigh line") {
        const VibronicSystem s = with_f(0.0);
        double best = -1.0;
        double best_minus = 1.0;
        for (int i = -100; i <= 100; ++i) {
            const double m = 0.004 * i;
            const double p = p_srs_vibronic(s, PhotonPairSource::from_sum_difference(7.97, m, kCorr.sigma_p(),
                                                                                     kCorr.sigma_m()));
            if (p > best) {
                best = p;
                best_minus = m;
            }
        }
        CHECK(best_minus == 0.0);
        CHECK(p_srs_vibronic(s, kCorr, 0) == doctest::Approx(p_srs_vibronic(s, kCorr, 30)).epsilon(1e-15));
    }
    SUBCASE("doubling T with D~ proportional to T halves the signal") {
        const VibronicSystem s = pyrene::system();
        const VibronicSystem hot = at_temperature(s, 2.0 * s.temperature);
        CHECK(hot.mode.low_freq_decay == doctest::Approx(2.0 * 0.536));
        CHECK(p_srs_vibronic(hot, kCorr) == doctest::Approx(p_srs_vibronic(s, kCorr) / 2.0).epsilon(1e-13));
        CHECK(p_tpa_vibronic(hot, kAnti) == p_tpa_vibronic(s, kAnti));
    }
    SUBCASE("first side peak at omega_j") {
        const VibronicSystem s = pyrene::system();
        double best = -1.0;
        double best_minus = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double m = 0.085 + 0.001 * i;  // beyond the Rayleigh line
            const double p = p_srs_vibronic(s, PhotonPairSource::from_sum_difference(8.14, m, kCorr.sigma_p(),
                                                                                     kCorr.sigma_m()));
            if (p > best) {
                best = p;
                best_minus = m;
            }
        }
        CHECK(best_minus == doctest::Approx(0.17).epsilon(1e-9));
    }
    SUBCASE("anti-Stokes flag mirrors omega_-") {
        const VibronicSystem s = pyrene::system();
        const auto mirrored = PhotonPairSource::from_sum_difference(8.14, -0.17, kCorr.sigma_p(), kCorr.sigma_m());
        CHECK(p_srs_vibronic(s, mirrored, 30, true) == doctest::Approx(p_srs_vibronic(s, kCorr)).epsilon(1e-13));
    }
    SUBCASE("singular decay") {
        VibronicSystem s = pyrene::system();
        s.mode.low_freq_decay = 0.0;
        CHECK_THROWS_AS(p_srs_vibronic(s, kCorr), DomainError);
        CHECK_THROWS_AS(ratio_vibronic(s, kAnti, kCorr), DomainError);
    }
}

TEST_CASE("p_tpa_vibronic") {
    SUBCASE("F = 0, zero detuning: Gaussian in omega_plus at omega_fg") {
        const VibronicSystem s = with_f(0.0);
        const double sp = kAnti.sigma_p();
        const double sm = kAnti.sigma_m();
        auto at = [&](double plus) { return p_tpa_vibronic(s, PhotonPairSource::from_sum_difference(plus, -0.3, sp, sm)); };
        const double peak = at(7.5);
        for (double d : {0.01, 0.05}) {
            CHECK(at(7.5 + d) / peak == doctest::Approx(std::exp(-d * d / (2 * sp * sp))).epsilon(1e-12));
            CHECK(at(7.5 - d) == doctest::Approx(at(7.5 + d)).epsilon(1e-12));
        }
    }
    SUBCASE("pyrene, anti-correlated source: peak at 7.5 eV") {
        const VibronicSystem s = pyrene::system();
        double best = -1.0;
        double best_plus = 0.0;
        for (int i = 0; i <= 600; ++i) {
            const double plus = 7.4 + 0.001 * i;
            const double p = p_tpa_vibronic(
                s, PhotonPairSource::from_sum_difference(plus, -0.3, kAnti.sigma_p(), kAnti.sigma_m()));
            if (p > best) {
                best = p;
                best_plus = plus;
            }
        }
        CHECK(best_plus == doctest::Approx(7.5).epsilon(1e-9));
    }
    SUBCASE("adjacent vibronic peaks are omega_j apart") {
        const VibronicSystem s = pyrene::system();
        const double h = 5e-4;
        std::vector<double> plus;
        std::vector<double> p;
        for (int i = 0; i <= 2400; ++i) {
            plus.push_back(6.9 + h * i);
            p.push_back(p_tpa_vibronic(
                s, PhotonPairSource::from_sum_difference(plus.back(), -0.3, kAnti.sigma_p(), kAnti.sigma_m())));
        }
        std::vector<double> peaks;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (p[i] > p[i - 1] && p[i] > p[i + 1]) peaks.push_back(plus[i]);
        }
        REQUIRE(peaks.size() >= 3);
        for (std::size_t i = 1; i < peaks.size(); ++i) CHECK(peaks[i] - peaks[i - 1] == doctest::Approx(0.17).epsilon(0.01));
    }
}

TEST_CASE("ratio_vibronic") {
    VibronicSystem lo = pyrene::system();
    lo.mode.low_freq_decay = 3.0;
    VibronicSystem hi = lo;
    hi.mode.low_freq_decay = 300.0;
    CHECK(ratio_vibronic(hi, kAnti, kCorr) / ratio_vibronic(lo, kAnti, kCorr) == doctest::Approx(100.0).epsilon(1e-12));
    const double r = ratio_vibronic(pyrene::system(), kAnti, kCorr);
    CHECK(r == doctest::Approx(p_tpa_vibronic(pyrene::system(), kAnti) / p_srs_vibronic(pyrene::system(), kCorr)).epsilon(1e-12));
    CHECK(r > 5.6 / 2);
    CHECK(r < 5.6 * 2);
    // far-detuned points overflow the linear ratio but stay finite in log space
    const auto far = PhotonPairSource::from_sum_difference(16.0, 12.0, kCorr.sigma_p(), kCorr.sigma_m());
    CHECK(std::isfinite(log_ratio_vibronic(pyrene::system(), kAnti, far)));
    CHECK_THROWS_AS(ratio_vibronic(pyrene::system(), kAnti, far), EvaluationError);
}

TEST_CASE("property: temperature linearity of the ratio") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> temp(50.0, 800.0);
    for (int k = 0; k < 100; ++k) {
        const VibronicSystem s = at_temperature(pyrene::system(), temp(rng));
        const VibronicSystem s2 = at_temperature(s, 2.0 * s.temperature);
        CHECK(ratio_vibronic(s2, kAnti, kCorr) == doctest::Approx(2.0 * ratio_vibronic(s, kAnti, kCorr)).epsilon(1e-9));
    }
}

TEST_CASE("property: monotone truncation and converged tail") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> f(0.0, 5.0);
    std::uniform_real_distribution<double> plus(6.5, 8.5);
    std::uniform_real_distribution<double> minus(-0.5, 1.0);
    for (int k = 0; k < 100; ++k) {
        const VibronicSystem s = with_f(f(rng));
        const auto src = PhotonPairSource::from_sum_difference(plus(rng), minus(rng), 0.1, 0.1);
        for (int n = 0; n < 30; ++n) {
            CHECK(p_tpa_vibronic(s, src, n + 1) >= p_tpa_vibronic(s, src, n));
            CHECK(p_srs_vibronic(s, src, n + 1) >= p_srs_vibronic(s, src, n));
        }
        const double t30 = p_tpa_vibronic(s, src, 30);
        const double s30 = p_srs_vibronic(s, src, 30);
        CHECK(p_tpa_vibronic(s, src, 31) - t30 <= 1e-10 * t30);
        CHECK(p_srs_vibronic(s, src, 31) - s30 <= 1e-10 * s30);
        CHECK(t30 > 0.0);
        CHECK(s30 > 0.0);
    }
}

TEST_CASE("property: scale covariance") {
    // energies, bandwidths and omega_j times kappa, D~ times kappa^2:
    // the 1 / ((n w_j + w_eg1) D~) prefactor carries kappa^-3
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> kappa(0.3, 3.0);
    for (int k = 0; k < 100; ++k) {
        const double c = kappa(rng);
        const VibronicSystem s = pyrene::system();
        VibronicSystem sc = s;
        sc.omega_eg *= c;
        sc.omega_fe *= c;
        sc.omega_eg1 *= c;
        sc.omega_eg2 *= c;
        sc.mode.omega_j *= c;
        sc.mode.low_freq_decay *= c * c;
        const PhotonPairSource src(4.0, 4.1, 0.1, 0.05);
        const PhotonPairSource srcc(4.0 * c, 4.1 * c, 0.1 * c, 0.05 * c);
        CHECK(p_srs_vibronic(sc, srcc) == doctest::Approx(p_srs_vibronic(s, src) / (c * c * c)).epsilon(1e-9));
        CHECK(p_tpa_vibronic(sc, srcc) == doctest::Approx(p_tpa_vibronic(s, src)).epsilon(1e-9));
    }
}

TEST_CASE("system validation") {
    VibronicSystem s = pyrene::system();
    CHECK_NOTHROW(s.validate());
    s.mode.omega_j = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = pyrene::system();
    s.mode.huang_rhys = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = pyrene::system();
    s.temperature = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    CHECK_THROWS_AS(p_tpa_vibronic(pyrene::system(), kAnti, -1), DomainError);
}
