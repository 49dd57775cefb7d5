// coldeph: run collective-dephasing scenarios from a config file and/or flags
//
// Exit codes: 0 ok, 2 invalid configuration, 3 numeric failure,
// 4 unreadable config file, 5 output not writable.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coldeph/errors.hpp"
#include "coldeph/run_config.hpp"
#include "coldeph/runner.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kNumeric = 3, kUnreadable = 4, kOutput = 5 };

struct Flag {
    const char* name;
    const char* key;
    const char* help;
    std::optional<std::string> value;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement and coherence under exact collective pure dephasing"};

    std::optional<std::string> config_path;
    std::optional<std::string> out;
    std::optional<std::string> report;
    std::optional<std::string> output_dir;
    app.add_option("--config", config_path, "Run configuration file");
    app.add_option("--out", out, "CSV output path (single-run configs only)");
    app.add_option("--report", report, "JSON report path");
    app.add_option("--output-dir", output_dir, "Directory for relative output paths");

    Flag flags[] = {
        {"--name", "name", "Run name (default CSV is <name>.csv)", {}},
        {"--task", "task", "timeseries | alpha-sweep", {}},
        {"--system", "system", "fermion | qubit", {}},
        {"--state", "state", "Named initial state", {}},
        {"--amplitudes", "amplitudes", "Comma-separated complex amplitudes", {}},
        {"--alpha", "alpha", "DFS-family coefficient, e.g. 0.3 or 0.6+0.8i", {}},
        {"--temperature-ratio", "temperature_ratio", "T/T_c, e.g. 0 or 1/60", {}},
        {"--j0", "j0", "Coupling strength J0", {}},
        {"--omega-c", "omega_c", "Bath cutoff frequency", {}},
        {"--omega0", "omega0", "Level splitting", {}},
        {"--mode", "mode", "zero-t | low-t | quadrature | discrete", {}},
        {"--n-modes", "n_modes", "Number of bath modes (discrete mode)", {}},
        {"--omega-max", "omega_max", "Highest bath frequency (discrete mode)", {}},
        {"--t-max", "t_max", "Final time in units of 1/omega_c", {}},
        {"--steps", "steps", "Number of time samples", {}},
    };
    for (Flag& f : flags) app.add_option(f.name, f.value, f.help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        coldeph::ParsedConfig parsed;
        std::string stem = "report";
        if (config_path) {
            parsed = coldeph::read_config_file(*config_path);
            stem = std::filesystem::path(*config_path).stem().string();
        } else if (!flags[3].value && !flags[4].value && !flags[1].value) {
            std::cerr << "error: nothing to run; give --config, --state, --amplitudes or --task\n";
            return kConfig;
        }

        coldeph::PlanOverrides overrides;
        for (const Flag& f : flags) {
            if (f.value) overrides.settings.emplace_back(f.key, *f.value);
        }
        if (out) overrides.out = *out;
        if (report) overrides.report = *report;
        if (output_dir) overrides.output_dir = *output_dir;

        const coldeph::RunPlan plan = coldeph::make_plan(parsed, overrides, stem);
        const coldeph::PlanSummary summary = coldeph::execute(plan);
        for (const auto& run : summary.runs) {
            for (const auto& w : run.warnings) std::cerr << "warning: " << run.name << ": " << w << '\n';
            std::cout << run.name << ": " << run.csv.string();
            if (run.task == coldeph::Task::TimeSeries) {
                std::cout << " (" << coldeph::to_string(run.regime.regime) << ", " << run.regime.events.size()
                          << " events)";
            }
            std::cout << '\n';
        }
        std::cout << "report: " << summary.report.string() << '\n';
        return kOk;
    } catch (const coldeph::ConfigUnreadable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnreadable;
    } catch (const coldeph::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const coldeph::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const coldeph::OutputError& e) {
        std::cerr << "output error: " << e.what() << '\n';
        return kOutput;
    }
}
