#include "coldeph/runner.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coldeph/errors.hpp"
#include "coldeph/measures.hpp"

namespace coldeph {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw OutputError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw OutputError("error while writing '" + path.string() + "'");
}

Json complex_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json bath_json(const BathParams& p) {
    Json j;
    j["mode"] = mode_name(p.mode);
    j["j0"] = p.j0;
    j["omega_c"] = p.omega_c;
    // JSON has no infinity; T = 0 is reported as beta = null.
    j["beta"] = p.zero_temperature() ? Json(nullptr) : Json(p.beta);
    if (const auto* d = std::get_if<DiscreteModes>(&p.mode)) {
        j["n_modes"] = d->n_modes;
        j["omega_max"] = d->omega_max;
    }
    return j;
}

Json run_json(const ResolvedRun& run, const RunSummary& summary, const std::filesystem::path& report_dir) {
    const RunConfig& c = run.config;
    Json j;
    j["name"] = c.name;
    j["task"] = to_string(c.task);
    j["system"] = to_string(run.system);
    // Relative to the report, so the report does not depend on where the run happened.
    j["csv"] = std::filesystem::absolute(summary.csv).lexically_proximate(report_dir).generic_string();
    if (c.task == Task::AlphaSweep) {
        j["points"] = kAlphaSweepPoints;
        j["warnings"] = summary.warnings;
        return j;
    }

    if (c.amplitudes) {
        Json amps = Json::array();
        for (Complex z : *c.amplitudes) amps.push_back(complex_json(z));
        j["amplitudes"] = amps;
    } else {
        j["state"] = c.state;
        if (named_state_uses_alpha(c.state)) {
            j["alpha"] = complex_json(c.alpha.value_or(Complex{kInvSqrt2, 0.0}));
        }
    }
    j["temperature_ratio"] = c.temperature_ratio;
    j["omega0"] = c.omega0;
    j["t_max"] = c.t_max;
    j["steps"] = c.steps;
    j["bath"] = bath_json(run.params);

    const RegimeReport& r = summary.regime;
    j["regime"] = to_string(r.regime);
    j["dfs_overlap"] = r.dfs_overlap;
    j["saturation_entropy"] = summary.saturation_entropy;
    j["initially_dead"] = r.initially_dead;

    const DensityMatrix rho0 = pure_density(*run.psi0);
    Json events = Json::array();
    for (const Event& e : r.events) {
        const DensityMatrix rho = evolve(rho0, run.params, e.time);
        Json ev;
        ev["kind"] = to_string(e.kind);
        ev["t"] = run.params.omega_c * e.time;
        ev["coherence"] = coherence(rho);
        events.push_back(ev);
    }
    j["events"] = events;
    j["warnings"] = summary.warnings;
    return j;
}

} // namespace

void write_time_series_csv(std::ostream& os, const TimeSeries& ts) {
    os << "t,concurrence,coherence,linear_entropy\n";
    for (std::size_t k = 0; k < ts.size(); ++k) {
        os << fmt(ts.times[k]) << ',' << fmt(ts.concurrence[k]) << ',' << fmt(ts.coherence[k]) << ','
           << fmt(ts.linear_entropy[k]) << '\n';
    }
}

void write_alpha_sweep_csv(std::ostream& os, const AlphaSweep& sweep) {
    os << "alpha,concurrence\n";
    for (std::size_t k = 0; k < sweep.alpha.size(); ++k) {
        os << fmt(sweep.alpha[k]) << ',' << fmt(sweep.concurrence[k]) << '\n';
    }
}

std::string render_report(const std::vector<ResolvedRun>& runs, const std::vector<RunSummary>& summaries,
                          const std::filesystem::path& report_path) {
    const std::filesystem::path dir = std::filesystem::absolute(report_path).parent_path();
    Json runs_json = Json::array();
    for (std::size_t k = 0; k < runs.size(); ++k) runs_json.push_back(run_json(runs[k], summaries[k], dir));
    Json report;
    report["runs"] = runs_json;
    return report.dump(2) + "\n";
}

PlanSummary execute(const RunPlan& plan) {
    std::vector<ResolvedRun> resolved;
    resolved.reserve(plan.runs.size());
    for (const RunConfig& c : plan.runs) resolved.push_back(resolve(c));

    PlanSummary result;
    result.report = plan.report;
    for (const ResolvedRun& run : resolved) {
        RunSummary s;
        s.name = run.config.name;
        s.task = run.config.task;
        s.csv = run.config.out;
        s.warnings = run.warnings;

        std::ostringstream csv;
        if (run.config.task == Task::AlphaSweep) {
            write_alpha_sweep_csv(csv, alpha_sweep(run.system, kAlphaSweepPoints));
        } else {
            const double t_max = run.config.t_max / run.params.omega_c;
            write_time_series_csv(csv, time_series(*run.psi0, run.params, t_max, run.config.steps));

            s.regime = classify(*run.psi0);
            EventScanOptions options;
            options.grid_points = std::max(options.grid_points, run.config.steps);
            const EventScan scan = detect_events(*run.psi0, run.params, t_max, options);
            s.regime.initially_dead = scan.initially_dead;
            s.regime.events = scan.events;
            s.saturation_entropy = saturation_entropy(*run.psi0);
        }
        write_file(s.csv, csv.str());
        result.runs.push_back(std::move(s));
    }
    write_file(plan.report, render_report(resolved, result.runs, plan.report));
    return result;
}

} // namespace coldeph
