#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "entspec/config.hpp"
#include "entspec/grid.hpp"

namespace entspec {

// Mutable copy of everything a grid point may change.
struct PointState {
    VibronicSystem system;
    PhotonPairSource source_tpa;
    PhotonPairSource source_srs;
    double omega_s = 0.0;  // jsi only
    double omega_i = 0.0;
};

PointState base_state(const SweepConfig& cfg);

// Applies one parameter-path assignment relative to the config's base state.
// Throws ConfigError for unknown paths, DomainError for values that make the
// system or a source invalid.
void apply_parameter(PointState& state, const SweepConfig& cfg, std::string_view path, double value);

// Observable at a single state (log10 applied if configured).
double evaluate_point(const SweepConfig& cfg, const PointState& state);

// Convenience: base state with a list of overrides applied.
double evaluate_point(const SweepConfig& cfg, const std::vector<std::pair<std::string, double>>& overrides);

struct SweepOptions {
    int threads = 0;  // 0 = OpenMP default
};

// Evaluates every grid point in parallel.  Output is independent of thread
// count and scheduling; the first failing point (row-major) is reported as an
// EvaluationError with its coordinates.
Grid run_sweep(const SweepConfig& cfg, const SweepOptions& options = {});

enum class EvaluationOrder { RowMajor, ColumnMajor };

// Single-threaded reference for run_sweep.
Grid run_sweep_serial(const SweepConfig& cfg, EvaluationOrder order = EvaluationOrder::RowMajor);

}  // namespace entspec
