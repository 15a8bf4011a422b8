#include "entspec/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

#include "entspec/errors.hpp"

namespace entspec {

using nlohmann::json;

namespace {

constexpr const char* kRequiredKeys = "model, observable, system, source (or source_tpa and source_srs), axis1";

const std::set<std::string> kTopLevelKeys = {"model",  "observable", "system",      "source",
                                             "source_tpa", "source_srs", "axis1",   "axis2",
                                             "n_max",  "log10_output", "anti_stokes", "decay_follows_temperature",
                                             "notes",  "preset"};
const std::set<std::string> kSystemKeys = {"omega_eg_eV", "omega_fe_eV", "omega_eg1_eV", "omega_eg2_eV",
                                           "mu_eg_D",     "mu_fe_D",     "mu_eg1_D",     "mu_eg2_D",
                                           "mode",        "temperature_K"};
const std::set<std::string> kModeKeys = {"omega_j_eV", "huang_rhys", "low_freq_decay_fs2", "lambda"};
const std::set<std::string> kSourceKeys = {"omega_s0_eV",   "omega_i0_eV", "omega_plus_eV",
                                           "omega_minus_eV", "sigma_p_fs",  "sigma_m_fs"};
const std::set<std::string> kAxisKeys = {"path", "min", "max", "count", "scale"};

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) throw ConfigError("unknown key", join(where, key));
    }
}

const json& require_object(const json& parent, const std::string& key, const std::string& where) {
    const std::string full = join(where, key);
    if (!parent.contains(key)) throw ConfigError("required key missing", full);
    const json& v = parent.at(key);
    if (!v.is_object()) throw ConfigError("expected an object", full);
    return v;
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    const std::string full = join(where, key);
    if (!obj.contains(key)) throw ConfigError("required key missing", full);
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("expected a number", full);
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError("expected a finite number", full);
    return x;
}

double optional_number(const json& obj, const std::string& key, const std::string& where, double fallback) {
    return obj.contains(key) ? require_number(obj, key, where) : fallback;
}

bool optional_bool(const json& obj, const std::string& key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) throw ConfigError("expected true or false", key);
    return obj.at(key).get<bool>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& where) {
    const std::string full = join(where, key);
    if (!obj.contains(key)) throw ConfigError("required key missing", full);
    if (!obj.at(key).is_string()) throw ConfigError("expected a string", full);
    return obj.at(key).get<std::string>();
}

void require_positive(double x, const std::string& key) {
    if (!(x > 0.0)) throw ConfigError("must be positive", key);
}

// Runs a domain constructor/validator and reports failures against `key`.
template <typename F>
auto as_config(const std::string& key, F&& f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw ConfigError(e.what(), key);
    }
}

PhotonPairSource parse_source(const json& doc, const std::string& key, json& snapshot) {
    const json& s = require_object(doc, key, "");
    reject_unknown(s, kSourceKeys, key);
    const bool by_components = s.contains("omega_s0_eV") || s.contains("omega_i0_eV");
    const bool by_sum = s.contains("omega_plus_eV") || s.contains("omega_minus_eV");
    if (by_components == by_sum) {
        throw ConfigError("give either omega_s0_eV/omega_i0_eV or omega_plus_eV/omega_minus_eV", key);
    }
    const double sigma_p = require_number(s, "sigma_p_fs", key);
    const double sigma_m = require_number(s, "sigma_m_fs", key);
    require_positive(sigma_p, key + ".sigma_p_fs");
    require_positive(sigma_m, key + ".sigma_m_fs");
    double ws = 0.0;
    double wi = 0.0;
    if (by_components) {
        ws = require_number(s, "omega_s0_eV", key);
        wi = require_number(s, "omega_i0_eV", key);
    } else {
        const double plus = require_number(s, "omega_plus_eV", key);
        const double minus = require_number(s, "omega_minus_eV", key);
        ws = 0.5 * (plus + minus);
        wi = 0.5 * (plus - minus);
    }
    snapshot[key] = s;
    return as_config(key, [&] { return PhotonPairSource::from_fs_bandwidths(ws, wi, sigma_p, sigma_m); });
}

VibronicSystem parse_system(const json& doc, Model model, json& snapshot) {
    const std::string where = "system";
    const json& s = require_object(doc, "system", "");
    reject_unknown(s, kSystemKeys, where);
    VibronicSystem sys{};
    sys.omega_eg = require_number(s, "omega_eg_eV", where);
    sys.omega_fe = require_number(s, "omega_fe_eV", where);
    sys.omega_eg1 = require_number(s, "omega_eg1_eV", where);
    sys.omega_eg2 = require_number(s, "omega_eg2_eV", where);
    sys.mu_eg = require_number(s, "mu_eg_D", where);
    sys.mu_fe = require_number(s, "mu_fe_D", where);
    sys.mu_eg1 = require_number(s, "mu_eg1_D", where);
    sys.mu_eg2 = require_number(s, "mu_eg2_D", where);

    json snap = s;
    if (model == Model::Vibronic) {
        const json& m = require_object(s, "mode", where);
        reject_unknown(m, kModeKeys, "system.mode");
        sys.mode.omega_j = require_number(m, "omega_j_eV", "system.mode");
        sys.mode.huang_rhys = require_number(m, "huang_rhys", "system.mode");
        sys.mode.low_freq_decay = require_number(m, "low_freq_decay_fs2", "system.mode");
        sys.mode.lambda = optional_number(m, "lambda", "system.mode", 0.0);
        sys.temperature = optional_number(s, "temperature_K", where, 295.0);
        snap["mode"]["lambda"] = sys.mode.lambda;
        snap["temperature_K"] = sys.temperature;
        as_config(where, [&] { sys.validate(); return 0; });
    } else {
        for (const char* key : {"mode", "temperature_K"}) {
            if (s.contains(key)) throw ConfigError("not used by the three_level model", join(where, key));
        }
        // Placeholder mode so the value is well-formed; the three-level kernels never read it.
        sys.mode = {1.0, 0.0, 1.0, 0.0};
        as_config(where, [&] {
            sys.tpa_pathway().validate();
            sys.raman_pathway().validate();
            return 0;
        });
    }
    snapshot["system"] = snap;
    return sys;
}

const ParameterPath* find_path(std::string_view path) {
    const auto& paths = parameter_paths();
    const auto it = std::find_if(paths.begin(), paths.end(), [&](const ParameterPath& p) { return p.path == path; });
    return it == paths.end() ? nullptr : &*it;
}

void check_path_applicable(const std::string& path, const std::string& key, Model model, Observable obs,
                           bool shared_source) {
    if (!find_path(path)) throw ConfigError("unknown parameter path '" + path + "'", key);
    const bool is_photon = path.starts_with("photon.");
    if (is_photon != (obs == Observable::Jsi)) {
        throw ConfigError(is_photon ? "photon.* paths only apply to the jsi observable"
                                    : "the jsi observable sweeps photon.* and source.* paths only",
                          key);
    }
    if (obs == Observable::Jsi && !is_photon && !path.starts_with("source.")) {
        throw ConfigError("the jsi observable sweeps photon.* and source.* paths only", key);
    }
    if (model == Model::ThreeLevel && (path.starts_with("system.mode.") || path == "system.temperature_K")) {
        throw ConfigError("'" + path + "' requires the vibronic model", key);
    }
    if (shared_source && (path.starts_with("source_tpa.") || path.starts_with("source_srs."))) {
        throw ConfigError("'" + path + "' needs separate source_tpa/source_srs records", key);
    }
}

Axis parse_axis(const json& doc, const std::string& key, json& snapshot) {
    const json& a = require_object(doc, key, "");
    reject_unknown(a, kAxisKeys, key);
    Axis axis;
    axis.path = require_string(a, "path", key);
    axis.min = require_number(a, "min", key);
    axis.max = require_number(a, "max", key);
    const json& count = a.contains("count") ? a.at("count") : throw ConfigError("required key missing", key + ".count");
    if (!count.is_number_integer()) throw ConfigError("expected an integer", key + ".count");
    const auto n = count.get<std::int64_t>();
    if (n < 2) throw ConfigError("needs at least 2 points", key + ".count");
    axis.count = static_cast<std::size_t>(n);
    const std::string scale = a.contains("scale") ? require_string(a, "scale", key) : "linear";
    if (scale == "linear") {
        axis.scale = AxisScale::Linear;
    } else if (scale == "log") {
        axis.scale = AxisScale::Log;
        if (!(axis.min > 0.0)) throw ConfigError("log-scaled axis needs min > 0", key + ".min");
    } else {
        throw ConfigError("expected 'linear' or 'log'", key + ".scale");
    }
    if (!(axis.max > axis.min)) throw ConfigError("needs max > min", key + ".max");
    json snap = a;
    snap["scale"] = scale;
    snapshot[key] = snap;
    return axis;
}

std::string describe_parse_error(std::string_view document, const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, document.size());
    for (std::size_t k = 0; k < end; ++k) {
        if (document[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::ostringstream msg;
    msg << "JSON parse error at line " << line << ", column " << column << ": " << e.what();
    return msg.str();
}

}  // namespace

const char* to_string(Model m) noexcept {
    return m == Model::ThreeLevel ? "three_level" : "vibronic";
}

const char* to_string(Observable o) noexcept {
    switch (o) {
        case Observable::Tpa: return "tpa";
        case Observable::Srs: return "srs";
        case Observable::Ratio: return "ratio";
        case Observable::Jsi: return "jsi";
    }
    return "?";
}

std::vector<double> Axis::values() const {
    std::vector<double> out(count);
    const double step = 1.0 / static_cast<double>(count - 1);
    if (scale == AxisScale::Linear) {
        for (std::size_t k = 0; k < count; ++k) out[k] = min + (max - min) * (static_cast<double>(k) * step);
    } else {
        const double lo = std::log10(min);
        const double hi = std::log10(max);
        for (std::size_t k = 0; k < count; ++k) out[k] = std::pow(10.0, lo + (hi - lo) * (static_cast<double>(k) * step));
    }
    out.front() = min;
    out.back() = max;
    return out;
}

std::string Axis::label() const {
    const ParameterPath* p = find_path(path);
    if (!p || p->unit.empty()) return path;
    return path + " [" + p->unit + "]";
}

const std::vector<ParameterPath>& parameter_paths() {
    static const std::vector<ParameterPath> paths = [] {
        std::vector<ParameterPath> out;
        for (std::string_view prefix : {"source", "source_tpa", "source_srs"}) {
            const auto add = [&](std::string_view field, std::string_view unit, std::string_view what) {
                out.push_back({std::string(prefix) + "." + std::string(field), std::string(unit), std::string(what)});
            };
            add("omega_s0_eV", "eV", "signal central frequency");
            add("omega_i0_eV", "eV", "idler central frequency");
            add("omega_plus_eV", "eV", "central sum frequency, difference held");
            add("omega_minus_eV", "eV", "central difference frequency, sum held");
            add("omega_plus_offset_eV", "eV", "shift of the central sum frequency");
            add("omega_minus_offset_eV", "eV", "shift of the central difference frequency");
            add("sigma_p_fs", "fs^-1", "sum bandwidth");
            add("sigma_m_fs", "fs^-1", "difference bandwidth");
        }
        const std::vector<ParameterPath> fixed = {
            {"system.omega_eg_eV", "eV", "g-e gap (TPA)"},
            {"system.omega_fe_eV", "eV", "e-f gap (TPA)"},
            {"system.omega_eg1_eV", "eV", "g1-e gap (Raman)"},
            {"system.omega_eg2_eV", "eV", "g2-e gap (Raman)"},
            {"system.mu_eg_D", "D", "g-e dipole"},
            {"system.mu_fe_D", "D", "e-f dipole"},
            {"system.mu_eg1_D", "D", "g1-e dipole"},
            {"system.mu_eg2_D", "D", "g2-e dipole"},
            {"system.mode.omega_j_eV", "eV", "vibrational frequency"},
            {"system.mode.huang_rhys", "", "Huang-Rhys factor F_j"},
            {"system.mode.low_freq_decay_fs2", "fs^-2", "low-frequency decay D~"},
            {"system.mode.lambda", "", "lineshape coupling"},
            {"system.temperature_K", "K", "temperature"},
            {"detuning.tpa_eV", "eV", "intermediate-level shift on the TPA pathway (omega_eg += d, omega_fe -= d)"},
            {"detuning.srs_eV", "eV", "intermediate-level shift on the Raman pathway (omega_eg1 += d, omega_eg2 += d)"},
            {"photon.omega_s_eV", "eV", "signal frequency (jsi)"},
            {"photon.omega_i_eV", "eV", "idler frequency (jsi)"},
        };
        out.insert(out.end(), fixed.begin(), fixed.end());
        return out;
    }();
    return paths;
}

SweepConfig parse_config(std::string_view document) {
    if (std::all_of(document.begin(), document.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
        throw ConfigError(std::string("empty document; required keys: ") + kRequiredKeys);
    }
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ConfigError(describe_parse_error(document, e));
    }
    return parse_config(doc);
}

SweepConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("top level must be a JSON object");
    {
        std::vector<std::string> missing;
        for (const char* key : {"model", "observable"}) {
            if (!doc.contains(key)) missing.emplace_back(key);
        }
        const bool jsi = doc.contains("observable") && doc.at("observable") == "jsi";
        if (!jsi && !doc.contains("system")) missing.emplace_back("system");
        if (!doc.contains("source") && !(doc.contains("source_tpa") && doc.contains("source_srs"))) {
            missing.emplace_back("source (or source_tpa and source_srs)");
        }
        if (!doc.contains("axis1")) missing.emplace_back("axis1");
        if (!missing.empty()) {
            std::string list;
            for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
            throw ConfigError("missing required keys: " + list + " (required: " + kRequiredKeys + ")");
        }
    }
    reject_unknown(doc, kTopLevelKeys, "");

    json snapshot = json::object();
    const std::string model_name = require_string(doc, "model", "");
    Model model;
    if (model_name == "three_level") {
        model = Model::ThreeLevel;
    } else if (model_name == "vibronic") {
        model = Model::Vibronic;
    } else {
        throw ConfigError("expected 'three_level' or 'vibronic'", "model");
    }
    const std::string obs_name = require_string(doc, "observable", "");
    Observable obs;
    if (obs_name == "tpa") {
        obs = Observable::Tpa;
    } else if (obs_name == "srs") {
        obs = Observable::Srs;
    } else if (obs_name == "ratio") {
        obs = Observable::Ratio;
    } else if (obs_name == "jsi") {
        obs = Observable::Jsi;
    } else {
        throw ConfigError("expected one of tpa, srs, ratio, jsi", "observable");
    }
    snapshot["model"] = model_name;
    snapshot["observable"] = obs_name;

    VibronicSystem system{};
    if (doc.contains("system")) {
        system = parse_system(doc, model, snapshot);
    } else {
        system = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, {1.0, 0.0, 1.0, 0.0}, 295.0};
    }

    const bool shared = doc.contains("source");
    if (shared && (doc.contains("source_tpa") || doc.contains("source_srs"))) {
        throw ConfigError("give either 'source' or both 'source_tpa' and 'source_srs'", "source");
    }
    if (!shared && obs == Observable::Jsi) throw ConfigError("the jsi observable takes a single 'source'", "source");
    const PhotonPairSource src_tpa = parse_source(doc, shared ? "source" : "source_tpa", snapshot);
    const PhotonPairSource src_srs = shared ? src_tpa : parse_source(doc, "source_srs", snapshot);

    Axis axis1 = parse_axis(doc, "axis1", snapshot);
    check_path_applicable(axis1.path, "axis1.path", model, obs, shared);
    std::optional<Axis> axis2;
    if (doc.contains("axis2")) {
        axis2 = parse_axis(doc, "axis2", snapshot);
        check_path_applicable(axis2->path, "axis2.path", model, obs, shared);
        if (axis2->path == axis1.path) throw ConfigError("axis2 sweeps the same path as axis1", "axis2.path");
    }

    int n_max = kDefaultNMax;
    if (doc.contains("n_max")) {
        const json& v = doc.at("n_max");
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1000) {
            throw ConfigError("expected an integer in [0, 1000]", "n_max");
        }
        n_max = v.get<int>();
    }
    const bool log10_output = optional_bool(doc, "log10_output", false);
    const bool anti_stokes = optional_bool(doc, "anti_stokes", false);
    const bool decay_follows_t = optional_bool(doc, "decay_follows_temperature", false);
    if (decay_follows_t && model != Model::Vibronic) {
        throw ConfigError("only meaningful for the vibronic model", "decay_follows_temperature");
    }
    snapshot["n_max"] = n_max;
    snapshot["log10_output"] = log10_output;
    snapshot["anti_stokes"] = anti_stokes;
    snapshot["decay_follows_temperature"] = decay_follows_t;

    if (doc.contains("notes")) {
        const json& notes = doc.at("notes");
        if (!notes.is_object()) throw ConfigError("expected an object of strings", "notes");
        for (const auto& [k, v] : notes.items()) {
            if (!v.is_string()) throw ConfigError("expected a string", "notes." + k);
        }
        snapshot["notes"] = notes;
    }
    if (doc.contains("preset")) snapshot["preset"] = require_string(doc, "preset", "");

    return SweepConfig{model,  obs,        system,       src_tpa,     src_srs,         shared,  std::move(axis1),
                       axis2,  n_max,      log10_output, anti_stokes, decay_follows_t, snapshot};
}

std::string config_hash(const json& snapshot) {
    const std::string canonical = snapshot.dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace entspec
