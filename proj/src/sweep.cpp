#include "entspec/sweep.hpp"

#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <omp.h>

#include "entspec/errors.hpp"
#include "entspec/grid_io.hpp"
#include "entspec/three_level.hpp"
#include "entspec/units.hpp"

namespace entspec {

namespace {

// Rebuilds a source with one field replaced; the source type is immutable.
PhotonPairSource with_source_field(const PhotonPairSource& s, std::string_view field, double value) {
    using units::angular_fs_to_ev;
    if (field == "omega_s0_eV") return {value, s.omega_i0(), s.sigma_p(), s.sigma_m()};
    if (field == "omega_i0_eV") return {s.omega_s0(), value, s.sigma_p(), s.sigma_m()};
    if (field == "omega_plus_eV") return PhotonPairSource::from_sum_difference(value, s.omega_minus(), s.sigma_p(), s.sigma_m());
    if (field == "omega_minus_eV") return PhotonPairSource::from_sum_difference(s.omega_plus(), value, s.sigma_p(), s.sigma_m());
    if (field == "omega_plus_offset_eV") {
        return PhotonPairSource::from_sum_difference(s.omega_plus() + value, s.omega_minus(), s.sigma_p(), s.sigma_m());
    }
    if (field == "omega_minus_offset_eV") {
        return PhotonPairSource::from_sum_difference(s.omega_plus(), s.omega_minus() + value, s.sigma_p(), s.sigma_m());
    }
    if (field == "sigma_p_fs") return {s.omega_s0(), s.omega_i0(), angular_fs_to_ev(value), s.sigma_m()};
    if (field == "sigma_m_fs") return {s.omega_s0(), s.omega_i0(), s.sigma_p(), angular_fs_to_ev(value)};
    throw ConfigError("unknown source field '" + std::string(field) + "'");
}

double* system_field(VibronicSystem& sys, std::string_view field) {
    if (field == "omega_eg_eV") return &sys.omega_eg;
    if (field == "omega_fe_eV") return &sys.omega_fe;
    if (field == "omega_eg1_eV") return &sys.omega_eg1;
    if (field == "omega_eg2_eV") return &sys.omega_eg2;
    if (field == "mu_eg_D") return &sys.mu_eg;
    if (field == "mu_fe_D") return &sys.mu_fe;
    if (field == "mu_eg1_D") return &sys.mu_eg1;
    if (field == "mu_eg2_D") return &sys.mu_eg2;
    if (field == "mode.omega_j_eV") return &sys.mode.omega_j;
    if (field == "mode.huang_rhys") return &sys.mode.huang_rhys;
    if (field == "mode.low_freq_decay_fs2") return &sys.mode.low_freq_decay;
    if (field == "mode.lambda") return &sys.mode.lambda;
    return nullptr;
}

double finish(const SweepConfig& cfg, double value) {
    if (cfg.log10_output) {
        if (!(value > 0.0)) throw EvaluationError("log10 output of a non-positive value");
        value = std::log10(value);
    }
    if (!std::isfinite(value)) throw EvaluationError("non-finite value");
    return value;
}

double finish_log(const SweepConfig& cfg, double log_value) {
    if (cfg.log10_output) {
        const double v = log_value / std::numbers::ln10;
        if (!std::isfinite(v)) throw EvaluationError("non-finite log value");
        return v;
    }
    return finish(cfg, std::exp(log_value));
}

struct SweepPlan {
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::optional<std::string> axis2_path;
};

SweepPlan plan(const SweepConfig& cfg) {
    SweepPlan p;
    p.axis1 = cfg.axis1.values();
    if (cfg.axis2) {
        p.axis2 = cfg.axis2->values();
        p.axis2_path = cfg.axis2->path;
    } else {
        p.axis2 = {0.0};
    }
    return p;
}

double evaluate_at(const SweepConfig& cfg, const SweepPlan& p, std::size_t row, std::size_t col) {
    PointState state = base_state(cfg);
    apply_parameter(state, cfg, cfg.axis1.path, p.axis1[row]);
    if (p.axis2_path) apply_parameter(state, cfg, *p.axis2_path, p.axis2[col]);
    return evaluate_point(cfg, state);
}

std::string point_context(const SweepConfig& cfg, const SweepPlan& p, std::size_t row, std::size_t col) {
    std::ostringstream msg;
    msg << "evaluation failed at " << cfg.axis1.path << " = " << format_double(p.axis1[row]);
    if (p.axis2_path) msg << ", " << *p.axis2_path << " = " << format_double(p.axis2[col]);
    return msg.str();
}

Grid make_grid(const SweepConfig& cfg, SweepPlan p, std::vector<double> values) {
    Grid grid;
    grid.axis1_label = cfg.axis1.label();
    grid.axis2_label = cfg.axis2 ? cfg.axis2->label() : "";
    grid.axis1_values = std::move(p.axis1);
    grid.axis2_values = std::move(p.axis2);
    grid.values = std::move(values);
    grid.metadata["model"] = to_string(cfg.model);
    grid.metadata["observable"] = to_string(cfg.observable);
    grid.metadata["log10_output"] = cfg.log10_output;
    grid.metadata["config_hash"] = config_hash(cfg.snapshot);
    grid.metadata["config"] = cfg.snapshot;
    const auto uses = [&](std::string_view prefix) {
        return cfg.axis1.path.starts_with(prefix) || (cfg.axis2 && cfg.axis2->path.starts_with(prefix));
    };
    if (uses("detuning.")) {
        grid.metadata["detuning_mapping"] =
            "detuning.tpa_eV shifts the intermediate level: omega_eg += d, omega_fe -= d; "
            "detuning.srs_eV: omega_eg1 += d, omega_eg2 += d; source central frequencies fixed";
    }
    return grid;
}

}  // namespace

PointState base_state(const SweepConfig& cfg) {
    return {cfg.system, cfg.source_tpa, cfg.source_srs, cfg.source_tpa.omega_s0(), cfg.source_tpa.omega_i0()};
}

void apply_parameter(PointState& state, const SweepConfig& cfg, std::string_view path, double value) {
    const auto dot = path.find('.');
    if (dot == std::string_view::npos) throw ConfigError("unknown parameter path '" + std::string(path) + "'");
    const std::string_view head = path.substr(0, dot);
    const std::string_view field = path.substr(dot + 1);

    if (head == "source" || head == "source_tpa" || head == "source_srs") {
        if (head != "source_srs") state.source_tpa = with_source_field(state.source_tpa, field, value);
        if (head != "source_tpa") state.source_srs = with_source_field(state.source_srs, field, value);
        return;
    }
    if (head == "system") {
        if (field == "temperature_K") {
            if (cfg.decay_follows_temperature) {
                state.system = at_temperature(state.system, value);
            } else {
                state.system.temperature = value;
            }
            return;
        }
        if (double* slot = system_field(state.system, field)) {
            *slot = value;
            return;
        }
    } else if (head == "detuning") {
        if (field == "tpa_eV") {
            state.system.omega_eg += value;
            state.system.omega_fe -= value;
            return;
        }
        if (field == "srs_eV") {
            state.system.omega_eg1 += value;
            state.system.omega_eg2 += value;
            return;
        }
    } else if (head == "photon") {
        if (field == "omega_s_eV") {
            state.omega_s = value;
            return;
        }
        if (field == "omega_i_eV") {
            state.omega_i = value;
            return;
        }
    }
    throw ConfigError("unknown parameter path '" + std::string(path) + "'");
}

double evaluate_point(const SweepConfig& cfg, const PointState& state) {
    if (cfg.observable == Observable::Jsi) return finish(cfg, jsi(state.source_tpa, state.omega_s, state.omega_i));

    if (cfg.model == Model::ThreeLevel) {
        const ThreeLevelTPA tpa = state.system.tpa_pathway();
        const ThreeLevelRaman raman = state.system.raman_pathway();
        tpa.validate();
        raman.validate();
        switch (cfg.observable) {
            case Observable::Tpa: return finish(cfg, p_tpa_3lvl(tpa, state.source_tpa));
            case Observable::Srs: return finish(cfg, p_srs_3lvl(raman, state.source_srs));
            case Observable::Ratio: {
                const auto det = DetuningSet::from_sources(tpa, raman, state.source_tpa, state.source_srs);
                return finish(cfg, ratio_3lvl(tpa, raman, state.source_tpa, state.source_srs, det));
            }
            case Observable::Jsi: break;
        }
    } else {
        state.system.validate();
        switch (cfg.observable) {
            case Observable::Tpa: return finish_log(cfg, log_p_tpa_vibronic(state.system, state.source_tpa, cfg.n_max));
            case Observable::Srs:
                return finish_log(cfg, log_p_srs_vibronic(state.system, state.source_srs, cfg.n_max, cfg.anti_stokes));
            case Observable::Ratio:
                return finish_log(cfg, log_ratio_vibronic(state.system, state.source_tpa, state.source_srs, cfg.n_max,
                                                          cfg.anti_stokes));
            case Observable::Jsi: break;
        }
    }
    throw EvaluationError("unsupported observable");
}

double evaluate_point(const SweepConfig& cfg, const std::vector<std::pair<std::string, double>>& overrides) {
    PointState state = base_state(cfg);
    for (const auto& [path, value] : overrides) apply_parameter(state, cfg, path, value);
    return evaluate_point(cfg, state);
}

Grid run_sweep(const SweepConfig& cfg, const SweepOptions& options) {
    SweepPlan p = plan(cfg);
    const std::size_t cols = p.axis2.size();
    const auto total = static_cast<std::int64_t>(p.axis1.size() * cols);
    std::vector<double> values(static_cast<std::size_t>(total), 0.0);

    std::int64_t first_failure = total;
    std::string failure_message;
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t k = 0; k < total; ++k) {
        const auto row = static_cast<std::size_t>(k) / cols;
        const auto col = static_cast<std::size_t>(k) % cols;
        try {
            values[static_cast<std::size_t>(k)] = evaluate_at(cfg, p, row, col);
        } catch (const std::exception& e) {
#pragma omp critical(entspec_sweep_failure)
            {
                if (k < first_failure) {
                    first_failure = k;
                    failure_message = point_context(cfg, p, row, col) + ": " + e.what();
                }
            }
        }
    }
    if (first_failure < total) throw EvaluationError(failure_message);
    return make_grid(cfg, std::move(p), std::move(values));
}

Grid run_sweep_serial(const SweepConfig& cfg, EvaluationOrder order) {
    SweepPlan p = plan(cfg);
    const std::size_t rows = p.axis1.size();
    const std::size_t cols = p.axis2.size();
    std::vector<double> values(rows * cols, 0.0);
    const auto visit = [&](std::size_t r, std::size_t c) {
        try {
            values[r * cols + c] = evaluate_at(cfg, p, r, c);
        } catch (const std::exception& e) {
            throw EvaluationError(point_context(cfg, p, r, c) + ": " + e.what());
        }
    };
    if (order == EvaluationOrder::RowMajor) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) visit(r, c);
    } else {
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r) visit(r, c);
    }
    return make_grid(cfg, std::move(p), std::move(values));
}

}  // namespace entspec
