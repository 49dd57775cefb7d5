// runner.hpp: executes a RunPlan and writes CSV files plus a JSON report
//
// Time series CSV:  t,concurrence,coherence,linear_entropy   (t in units of 1/wc)
// Alpha sweep CSV:  alpha,concurrence                        (201 points on [0,1])
// Numbers use 15 significant digits, lines end in LF. Output is a pure
// function of the plan, so identical plans give identical bytes.

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "coldeph/analysis.hpp"
#include "coldeph/run_config.hpp"

namespace coldeph {

inline constexpr int kAlphaSweepPoints = 201;

void write_time_series_csv(std::ostream& os, const TimeSeries& ts);
void write_alpha_sweep_csv(std::ostream& os, const AlphaSweep& sweep);

struct RunSummary {
    std::string name;
    Task task{Task::TimeSeries};
    std::filesystem::path csv;
    std::vector<std::string> warnings;
    RegimeReport regime;           // time series only
    double saturation_entropy{0.0}; // time series only
};

struct PlanSummary {
    std::vector<RunSummary> runs;
    std::filesystem::path report;
};

// Resolves every run before writing anything, so a config error leaves no
// partial output. Throws ConfigError, NumericError, OutputError.
PlanSummary execute(const RunPlan& plan);

// Report text for already computed runs. CSV paths are written relative to
// the directory of report_path.
std::string render_report(const std::vector<ResolvedRun>& runs, const std::vector<RunSummary>& summaries,
                          const std::filesystem::path& report_path);

} // namespace coldeph
