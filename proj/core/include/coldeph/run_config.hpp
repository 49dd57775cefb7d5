// run_config.hpp: run configuration files and their resolution into runs
//
// A config file is a list of `key = value` lines. `#` starts a comment. Lines
// before the first `[name]` header are shared defaults; each `[name]` section
// describes one run and may override any of them. A file without sections is
// a single run. Keys accept `-` or `_` interchangeably.
//
//   system             fermion | qubit (inferred from a named state)
//   state              a named state (see named_state)
//   amplitudes         comma-separated complex amplitudes, instead of state
//   alpha              complex, e.g. 0.3, 0.6+0.8i (DFS families only)
//   temperature_ratio  T / T_c >= 0, T_c = omega_c; fractions like 1/60 allowed
//   j0, omega_c, omega0
//   mode               zero-t | low-t | quadrature | discrete
//   n_modes, omega_max discrete-mode bath parameters (omega_max absolute)
//   t_max              in units of 1/omega_c
//   steps              number of time samples
//   task               timeseries | alpha-sweep
//   out                CSV path (default <name>.csv)
//   report             report path (top level only)

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coldeph/channel.hpp"
#include "coldeph/hilbert.hpp"

namespace coldeph {

enum class Task { TimeSeries, AlphaSweep };

std::string_view to_string(Task task);

// Ordered (key, value) pairs; later entries win.
using Settings = std::vector<std::pair<std::string, std::string>>;

struct RunConfig {
    std::string name{"run"};
    Task task{Task::TimeSeries};
    std::optional<SystemKind> system;
    std::string state{"f1234"};
    std::optional<std::vector<Complex>> amplitudes;
    std::optional<Complex> alpha;
    double temperature_ratio{0.0};
    double j0{5.0};
    double omega_c{1.0};
    double omega0{0.0};
    BathMode mode{ClosedFormLowT{}};
    std::optional<int> n_modes;      // discrete mode only
    std::optional<double> omega_max; // discrete mode only
    double t_max{10.0}; // units of 1/omega_c
    int steps{2000};
    std::filesystem::path out;
};

// Applies one setting; throws ConfigError for unknown keys and bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

struct ParsedConfig {
    Settings shared;
    std::vector<std::pair<std::string, Settings>> sections;
};

// Throws ConfigError (with the line number) on malformed input.
ParsedConfig parse_config(std::string_view text);

// Throws ConfigUnreadable when the file cannot be opened.
ParsedConfig read_config_file(const std::filesystem::path& path);

struct PlanOverrides {
    Settings settings; // applied to every run after the file settings
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> report;
    std::optional<std::filesystem::path> output_dir;
};

struct RunPlan {
    std::vector<RunConfig> runs;
    std::filesystem::path report;
};

// Relative out/report paths are placed under output_dir. The default report
// is <report_stem>.json. Throws ConfigError, e.g. for --out with several runs.
RunPlan make_plan(const ParsedConfig& parsed, const PlanOverrides& overrides,
                  std::string_view report_stem = "report");

// Everything a run needs, validated.
struct ResolvedRun {
    RunConfig config;
    SystemKind system{SystemKind::Fermionic};
    std::optional<StateVector> psi0; // empty for an alpha sweep
    BathParams params;
    std::vector<std::string> warnings;
};

// Amplitudes whose norm differs from 1 by more than this are rejected.
inline constexpr double kAmplitudeNormReject = 1e-9;

// Throws ConfigError for inconsistent or invalid settings.
ResolvedRun resolve(const RunConfig& config);

// "0.3", "-2.5e-1", "1/60"
double parse_real(std::string_view text);
// "0.6", "0.6+0.8i", "-0.5i", "i"
Complex parse_complex(std::string_view text);

} // namespace coldeph
