// entspec command-line interface: single-point evaluation, parameter sweeps,
// figure presets and the oracle validation suite.
//
// Exit codes: 0 success, 1 usage/config error, 2 evaluation or I/O error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entspec/config.hpp"
#include "entspec/errors.hpp"
#include "entspec/grid_io.hpp"
#include "entspec/oracle.hpp"
#include "entspec/presets.hpp"
#include "entspec/sweep.hpp"
#include "entspec/units.hpp"
#include "entspec/vibronic.hpp"

namespace {

using namespace entspec;

constexpr int kExitConfig = 1;
constexpr int kExitEvaluation = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepConfig load(const std::string& config_path, const std::string& figure) {
    if (!config_path.empty() && !figure.empty()) throw ConfigError("give either --config or --figure, not both");
    if (!figure.empty()) return figure_preset(figure);
    if (config_path.empty()) throw ConfigError("one of --config or --figure is required");
    return parse_config(read_file(config_path));
}

std::pair<std::string, double> parse_assignment(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("expected path=value, got '" + text + "'", "--set");
    const std::string path = text.substr(0, eq);
    const std::string number = text.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(number, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != number.size() || number.empty()) throw ConfigError("not a number: '" + number + "'", path);
    const auto& paths = parameter_paths();
    if (std::none_of(paths.begin(), paths.end(), [&](const ParameterPath& p) { return p.path == path; })) {
        throw ConfigError("unknown parameter path", path);
    }
    return {path, value};
}

enum class Format { Csv, Json };

Format parse_format(const std::string& name, const std::string& out_path) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name.empty()) return out_path.ends_with(".json") ? Format::Json : Format::Csv;
    throw ConfigError("expected csv or json", "--format");
}

void write(const Grid& grid, const std::string& out, Format format) {
    if (format == Format::Json) {
        write_grid_json(grid, std::filesystem::path(out));
    } else {
        write_grid_csv(grid, std::filesystem::path(out));
    }
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int run_validate(const std::string& report_path) {
    std::vector<Check> checks;

    {
        const std::vector<PhotonPairSource> sources = {
            PhotonPairSource::from_fs_bandwidths(3.6, 3.9, 0.05, 0.3),
            PhotonPairSource::from_fs_bandwidths(4.155, 3.985, 0.3, 0.05),
            PhotonPairSource::from_fs_bandwidths(3.7, 3.8, 0.01, 1.0),
        };
        double worst = 0.0;
        for (const auto& s : sources) worst = std::max(worst, std::abs(oracle::jsa_norm(s) - 1.0));
        std::ostringstream d;
        d << "max |norm - 1| = " << worst;
        checks.push_back({"jsa normalisation", worst < 1e-9, d.str()});
    }
    {
        double worst = 0.0;
        for (double F : {0.1, 1.0, 5.0}) {
            double sum = 0.0;
            for (int n = 0; n <= 30; ++n) sum += franck_condon(F, n);
            worst = std::max(worst, std::abs(sum - 1.0));
        }
        std::ostringstream d;
        d << "max |sum S_n - 1| = " << worst;
        checks.push_back({"Franck-Condon closure", worst < 1e-12, d.str()});
    }
    {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> centre(-1.0, 1.0);
        std::uniform_real_distribution<double> offset(-3.0, 3.0);
        std::uniform_real_distribution<double> width(0.05, 2.0);
        const oracle::QuadratureSpec tight{1e-13, 1e-13, 5000};
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            const double c = centre(rng);
            const double s = width(rng);
            const double p = c + offset(rng) * s;
            const double exact = oracle::pv_gaussian_exact(c, p, s);
            const double quad = oracle::pv_quadrature(c, p, s, tight);
            worst = std::max(worst, std::abs(quad - exact) / std::abs(exact));
        }
        std::ostringstream d;
        d << "max relative gap = " << worst;
        checks.push_back({"principal value: Dawson vs excision", worst < 1e-8, d.str()});
    }

    bool ok = true;
    for (const auto& c : checks) {
        std::cout << "# " << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        ok = ok && c.pass;
    }
    const double sigma = units::angular_fs_to_ev(0.3);
    const auto rows = oracle::pv_approx_error_report(sigma, {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0});
    oracle::write_pv_report_csv(rows, std::cout);
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + report_path + "' for writing");
        oracle::write_pv_report_csv(rows, out);
    }
    return ok ? 0 : kExitEvaluation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entangled two-photon absorption vs. stimulated Raman scattering signal simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string figure_name;
    std::string out_path;
    std::string format_name;
    std::string report_path;
    std::vector<std::string> assignments;
    int threads = 0;
    bool print_config = false;

    auto* point = app.add_subcommand("point", "Evaluate the configured observable at its base point; prints JSON");
    point->add_option("--config", config_path, "Sweep config (axes are ignored)");
    point->add_option("--figure", figure_name, "Use a figure preset as the base config");
    point->add_option("--set", assignments, "Override a parameter: path=value (repeatable)");

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
    sweep->add_option("--config", config_path, "Sweep config")->required();
    sweep->add_option("--out", out_path, "Output grid file")->required();
    sweep->add_option("--format", format_name, "csv or json (default: from extension, else csv)");
    sweep->add_option("--threads", threads, "OpenMP threads (0 = default)");

    auto* figure = app.add_subcommand("figure", "Run a built-in figure preset");
    figure->add_option("name", figure_name, "Preset name")->required();
    figure->add_option("--out", out_path, "Output grid file");
    figure->add_option("--format", format_name, "csv or json (default: from extension, else csv)");
    figure->add_option("--threads", threads, "OpenMP threads (0 = default)");
    figure->add_flag("--print-config", print_config, "Print the preset's config document and exit");

    auto* validate = app.add_subcommand("validate", "Run the oracle suite and print the PV approximation report");
    validate->add_option("--report", report_path, "Also write the PV report CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*point) {
            const SweepConfig cfg = load(config_path, figure_name);
            std::vector<std::pair<std::string, double>> overrides;
            nlohmann::json applied = nlohmann::json::object();
            for (const auto& a : assignments) {
                overrides.push_back(parse_assignment(a));
                applied[overrides.back().first] = overrides.back().second;
            }
            const double value = evaluate_point(cfg, overrides);
            nlohmann::json result = {{"model", to_string(cfg.model)},
                                     {"observable", to_string(cfg.observable)},
                                     {"log10_output", cfg.log10_output},
                                     {"overrides", applied},
                                     {"config_hash", config_hash(cfg.snapshot)},
                                     {"value", value}};
            std::cout << result.dump(2) << '\n';
        } else if (*sweep) {
            const SweepConfig cfg = parse_config(read_file(config_path));
            write(run_sweep(cfg, {threads}), out_path, parse_format(format_name, out_path));
        } else if (*figure) {
            if (print_config) {
                std::cout << figure_document(figure_name).dump(2) << '\n';
                return 0;
            }
            if (out_path.empty()) throw ConfigError("--out is required unless --print-config is given", "--out");
            const SweepConfig cfg = figure_preset(figure_name);
            write(run_sweep(cfg, {threads}), out_path, parse_format(format_name, out_path));
        } else if (*validate) {
            return run_validate(report_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEvaluation;
    }
    return 0;
}
