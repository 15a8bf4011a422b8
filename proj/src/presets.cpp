#include "entspec/presets.hpp"

#include <algorithm>

#include "entspec/errors.hpp"

namespace entspec {

using nlohmann::json;

VibronicSystem pyrene::system() {
    return {omega_eg, omega_fe, omega_eg1, omega_eg2, mu_eg, mu_fe, mu_eg, mu_eg,
            {omega_j, huang_rhys, decay, 0.0}, temperature};
}

namespace {

json pyrene_system(double decay = pyrene::decay) {
    return {{"omega_eg_eV", pyrene::omega_eg},
            {"omega_fe_eV", pyrene::omega_fe},
            {"omega_eg1_eV", pyrene::omega_eg1},
            {"omega_eg2_eV", pyrene::omega_eg2},
            {"mu_eg_D", pyrene::mu_eg},
            {"mu_fe_D", pyrene::mu_fe},
            {"mu_eg1_D", pyrene::mu_eg},
            {"mu_eg2_D", pyrene::mu_eg},
            {"mode", {{"omega_j_eV", pyrene::omega_j}, {"huang_rhys", pyrene::huang_rhys}, {"low_freq_decay_fs2", decay}}},
            {"temperature_K", pyrene::temperature}};
}

// Anti-correlated pair at the ETPA peak.
json tpa_source() {
    return {{"omega_plus_eV", pyrene::tpa_omega_plus},
            {"omega_minus_eV", pyrene::tpa_omega_minus},
            {"sigma_p_fs", 0.05},
            {"sigma_m_fs", 0.3}};
}

// Correlated pair at the first ESRS vibrational side peak.
json srs_source() {
    return {{"omega_plus_eV", pyrene::srs_omega_plus},
            {"omega_minus_eV", pyrene::srs_omega_minus},
            {"sigma_p_fs", 0.3},
            {"sigma_m_fs", 0.05}};
}

json axis(const char* path, double min, double max, int count, const char* scale = "linear") {
    return {{"path", path}, {"min", min}, {"max", max}, {"count", count}, {"scale", scale}};
}

json jsi_figure(const json& source, double ws0, double wi0) {
    return {{"model", "three_level"},
            {"observable", "jsi"},
            {"source", source},
            {"axis1", axis("photon.omega_s_eV", ws0 - 0.6, ws0 + 0.6, 121)},
            {"axis2", axis("photon.omega_i_eV", wi0 - 0.6, wi0 + 0.6, 121)}};
}

json fig2(double decay) {
    return {{"model", "vibronic"},
            {"observable", "ratio"},
            {"system", pyrene_system(decay)},
            {"source", {{"omega_s0_eV", 3.75}, {"omega_i0_eV", 3.75}, {"sigma_p_fs", 0.3}, {"sigma_m_fs", 0.3}}},
            {"axis1", axis("source.sigma_m_fs", 0.05, 0.5, 100)},
            {"axis2", axis("source.sigma_p_fs", 0.05, 0.5, 100)}};
}

json centre_frequency_plane(const char* observable, const json& source) {
    return {{"model", "vibronic"},
            {"observable", observable},
            {"system", pyrene_system()},
            {"source", source},
            {"axis1", axis("source.omega_plus_eV", 7.2, 8.4, 121)},
            {"axis2", axis("source.omega_minus_eV", -0.4, 0.4, 81)}};
}

json per_process_ratio() {
    return {{"model", "vibronic"},
            {"observable", "ratio"},
            {"system", pyrene_system()},
            {"source_tpa", tpa_source()},
            {"source_srs", srs_source()}};
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig1c", "fig1d", "fig2a", "fig2b", "fig3a",
                                                   "fig3b", "fig3c", "fig4a", "fig4b", "fig5"};
    return names;
}

json figure_document(std::string_view name) {
    json doc;
    if (name == "fig1c") {
        const double ws0 = 0.5 * (pyrene::srs_omega_plus + pyrene::srs_omega_minus);
        const double wi0 = 0.5 * (pyrene::srs_omega_plus - pyrene::srs_omega_minus);
        doc = jsi_figure({{"omega_s0_eV", ws0}, {"omega_i0_eV", wi0}, {"sigma_p_fs", 0.3}, {"sigma_m_fs", 0.05}}, ws0, wi0);
    } else if (name == "fig1d") {
        doc = jsi_figure({{"omega_s0_eV", pyrene::omega_fe}, {"omega_i0_eV", pyrene::omega_eg}, {"sigma_p_fs", 0.05},
                          {"sigma_m_fs", 0.3}},
                         pyrene::omega_fe, pyrene::omega_eg);
    } else if (name == "fig2a") {
        doc = fig2(3.0);
    } else if (name == "fig2b") {
        doc = fig2(300.0);
    } else if (name == "fig3a") {
        doc = centre_frequency_plane("tpa", tpa_source());
    } else if (name == "fig3b") {
        doc = centre_frequency_plane("srs", srs_source());
    } else if (name == "fig3c") {
        doc = per_process_ratio();
        doc["axis1"] = axis("source.omega_plus_offset_eV", -0.3, 0.3, 61);
        doc["axis2"] = axis("source.omega_minus_offset_eV", -0.3, 0.3, 61);
        doc["log10_output"] = true;
        doc["notes"] = {{"window",
                         "+-0.3 eV around each process's peak: ETPA (omega_+, omega_-) = (7.5, -0.3) eV, "
                         "ESRS (8.14, 0.17) eV"}};
    } else if (name == "fig4a") {
        doc = per_process_ratio();
        doc["axis1"] = axis("system.mode.huang_rhys", 0.1, 3.0, 59);
        doc["axis2"] = axis("system.mode.low_freq_decay_fs2", 0.01, 100.0, 81, "log");
        doc["log10_output"] = true;
    } else if (name == "fig4b") {
        doc = per_process_ratio();
        doc["axis1"] = axis("detuning.tpa_eV", -0.5, 0.5, 101);
        doc["axis2"] = axis("detuning.srs_eV", -0.5, 0.5, 101);
        doc["log10_output"] = true;
    } else if (name == "fig5") {
        doc = per_process_ratio();
        doc["axis1"] = axis("system.temperature_K", 100.0, 600.0, 51);
        doc["decay_follows_temperature"] = true;
    } else {
        std::string known;
        for (const auto& n : figure_names()) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown figure '" + std::string(name) + "' (known: " + known + ")", "figure");
    }
    doc["preset"] = std::string(name);
    return doc;
}

SweepConfig figure_preset(std::string_view name) { return parse_config(figure_document(name)); }

}  // namespace entspec
