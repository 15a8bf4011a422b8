#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "entspec/config.hpp"
#include "entspec/errors.hpp"
#include "entspec/grid_io.hpp"
#include "entspec/presets.hpp"
#include "entspec/sweep.hpp"
#include "entspec/three_level.hpp"
#include "entspec/vibronic.hpp"

using namespace entspec;
using nlohmann::json;

namespace {

std::string csv(const Grid& g) {
    std::ostringstream out;
    write_grid_csv(g, out);
    return out.str();
}

// Preset with every axis count replaced by 2n - 1 (every old point kept).
SweepConfig refined(const std::string& name) {
    json doc = figure_document(name);
    for (const char* a : {"axis1", "axis2"}) {
        if (doc.contains(a)) doc[a]["count"] = 2 * doc[a]["count"].get<int>() - 1;
    }
    return parse_config(doc);
}

json three_level_doc() {
    return json::parse(R"({
      "model": "three_level", "observable": "ratio",
      "system": {"omega_eg_eV": 3.9, "omega_fe_eV": 3.6, "omega_eg1_eV": 3.9, "omega_eg2_eV": 4.07,
                 "mu_eg_D": 4.35, "mu_fe_D": 6.99, "mu_eg1_D": 4.35, "mu_eg2_D": 4.35},
      "source": {"omega_s0_eV": 3.6, "omega_i0_eV": 3.9, "sigma_p_fs": 0.05, "sigma_m_fs": 0.3},
      "axis1": {"path": "source.sigma_m_fs", "min": 0.3, "max": 0.30000000000000004, "count": 2},
      "axis2": {"path": "source.sigma_p_fs", "min": 0.05, "max": 0.05000000000000001, "count": 2}
    })");
}

}  // namespace

TEST_CASE("constant 2x2 sweep matches a point call") {
    const SweepConfig cfg = parse_config(three_level_doc());
    const Grid g = run_sweep(cfg);
    REQUIRE(g.values.size() == 4);
    const double point = evaluate_point(cfg, base_state(cfg));
    for (double v : g.values) CHECK(v == doctest::Approx(point).epsilon(1e-11));
    const auto& t = cfg.system.tpa_pathway();
    const auto& r = cfg.system.raman_pathway();
    CHECK(point == doctest::Approx(ratio_3lvl(t, r, cfg.source_tpa, cfg.source_srs,
                                              DetuningSet::from_sources(t, r, cfg.source_tpa, cfg.source_srs)))
                       .epsilon(1e-15));
}

TEST_CASE("grid shape, labels and metadata") {
    const SweepConfig cfg = figure_preset("fig3a");
    const Grid g = run_sweep(cfg);
    CHECK(g.rows() == 121);
    CHECK(g.cols() == 81);
    CHECK(g.values.size() == g.rows() * g.cols());
    CHECK(g.axis1_label == "source.omega_plus_eV [eV]");
    CHECK(g.axis2_label == "source.omega_minus_eV [eV]");
    CHECK(g.metadata.at("model") == "vibronic");
    CHECK(g.metadata.at("observable") == "tpa");
    CHECK(g.metadata.at("config_hash") == config_hash(cfg.snapshot));
    CHECK(g.metadata.at("config") == cfg.snapshot);
    for (double v : g.values) CHECK(std::isfinite(v));
    // row r, column c is the point call at those axis values
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {60, 40}, {120, 80}, {17, 3}}) {
        const double direct = evaluate_point(
            cfg, {{"source.omega_plus_eV", g.axis1_values[r]}, {"source.omega_minus_eV", g.axis2_values[c]}});
        CHECK(g.at(r, c) == direct);
    }
    const Grid one_d = run_sweep(figure_preset("fig5"));
    CHECK(one_d.cols() == 1);
    CHECK(one_d.axis2_label.empty());
    CHECK(run_sweep(figure_preset("fig4b")).metadata.contains("detuning_mapping"));
}

TEST_CASE("determinism across orders and thread counts") {
    for (const char* name : {"fig3c", "fig4a", "fig1d"}) {
        CAPTURE(name);
        const SweepConfig cfg = figure_preset(name);
        const std::string ref = csv(run_sweep_serial(cfg));
        CHECK(csv(run_sweep_serial(cfg, EvaluationOrder::ColumnMajor)) == ref);
        CHECK(csv(run_sweep(cfg)) == ref);
        for (int threads : {1, 2, 3, 8}) CHECK(csv(run_sweep(cfg, {threads})) == ref);
    }
}

TEST_CASE("D~ scaling across the bandwidth plane") {
    const Grid a = run_sweep(figure_preset("fig2a"));
    const Grid b = run_sweep(figure_preset("fig2b"));
    REQUIRE(a.values.size() == 10000);
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        CHECK(b.values[k] / a.values[k] == doctest::Approx(100.0).epsilon(1e-9));
    }
}

TEST_CASE("temperature sweep is proportional to T") {
    const Grid g = run_sweep(figure_preset("fig5"));
    for (std::size_t r = 0; r < g.rows(); ++r) {
        CHECK(g.values[r] / g.axis1_values[r] == doctest::Approx(g.values[0] / g.axis1_values[0]).epsilon(1e-12));
    }
}

TEST_CASE("parameter application") {
    const SweepConfig cfg = figure_preset("fig4b");
    PointState s = base_state(cfg);
    apply_parameter(s, cfg, "detuning.tpa_eV", 0.2);
    CHECK(s.system.omega_eg == doctest::Approx(3.9 + 0.2));
    CHECK(s.system.omega_fe == doctest::Approx(3.6 - 0.2));
    CHECK(s.system.omega_fg() == doctest::Approx(7.5));
    apply_parameter(s, cfg, "detuning.srs_eV", -0.1);
    CHECK(s.system.omega_eg1 == doctest::Approx(3.8));
    CHECK(s.system.omega_eg2 == doctest::Approx(3.97));
    CHECK_THROWS_AS(apply_parameter(s, cfg, "detuning.other", 1.0), ConfigError);

    const SweepConfig c3 = figure_preset("fig3c");
    PointState t = base_state(c3);
    apply_parameter(t, c3, "source.omega_plus_offset_eV", 0.1);
    CHECK(t.source_tpa.omega_plus() == doctest::Approx(7.6));
    CHECK(t.source_srs.omega_plus() == doctest::Approx(8.24));
    CHECK(t.source_srs.omega_minus() == doctest::Approx(0.17));

    const SweepConfig c5 = figure_preset("fig5");
    PointState u = base_state(c5);
    apply_parameter(u, c5, "system.temperature_K", 590.0);
    CHECK(u.system.mode.low_freq_decay == doctest::Approx(2.0 * 0.536));
}

TEST_CASE("evaluation errors carry the point") {
    json doc = figure_document("fig3a");
    doc["axis2"]["min"] = -8.0;  // omega_- beyond omega_+ drives the idler negative
    const SweepConfig cfg = parse_config(doc);
    for (int threads : {1, 3}) {
        try {
            run_sweep(cfg, {threads});
            FAIL("expected an EvaluationError");
        } catch (const EvaluationError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("source.omega_plus_eV = 7.2") != std::string::npos);
            CHECK(msg.find("source.omega_minus_eV = -8") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(run_sweep_serial(cfg), EvaluationError);
}

TEST_CASE("log10 output") {
    json doc = figure_document("fig3c");
    const Grid lg = run_sweep(parse_config(doc));
    doc["log10_output"] = false;
    const Grid lin = run_sweep(parse_config(doc));
    for (std::size_t k = 0; k < lg.values.size(); k += 97) {
        CHECK(lg.values[k] == doctest::Approx(std::log10(lin.values[k])).epsilon(1e-12));
    }
}

TEST_CASE("argmax is stable under resolution doubling") {
    for (const auto& name : figure_names()) {
        CAPTURE(name);
        const Grid coarse = run_sweep(figure_preset(name));
        const Grid fine = run_sweep(refined(name));
        const auto [cr, cc] = coarse.argmax();
        const auto [fr, fc] = fine.argmax();
        CHECK(std::abs(static_cast<long>(fr) - 2 * static_cast<long>(cr)) <= 2);
        CHECK(std::abs(static_cast<long>(fc) - 2 * static_cast<long>(cc)) <= 2);
    }
}
