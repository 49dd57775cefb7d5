#include "coldeph/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "coldeph/errors.hpp"

namespace coldeph {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
    std::string k(trim(key));
    std::replace(k.begin(), k.end(), '-', '_');
    return k;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
    std::ostringstream os;
    os << "invalid value '" << value << "' for " << key << ": " << why;
    throw ConfigError(os.str());
}

double plain_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ConfigError("not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    text = trim(text);
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) bad_value(key, text, "expected an integer");
    return value;
}

double checked_real(std::string_view key, std::string_view text) {
    try {
        return parse_real(text);
    } catch (const ConfigError& e) {
        bad_value(key, text, e.what());
    }
}

BathMode parse_mode(std::string_view text) {
    if (text == "zero-t") return ClosedFormZeroT{};
    if (text == "low-t") return ClosedFormLowT{};
    if (text == "quadrature") return Quadrature{};
    if (text == "discrete") return DiscreteModes{};
    bad_value("mode", text, "expected zero-t, low-t, quadrature or discrete");
}

} // namespace

std::string_view to_string(Task task) {
    return task == Task::TimeSeries ? "timeseries" : "alpha-sweep";
}

double parse_real(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return plain_real(text);
    const double num = plain_real(text.substr(0, slash));
    const double den = plain_real(text.substr(slash + 1));
    if (den == 0.0) throw ConfigError("division by zero in '" + std::string(text) + "'");
    return num / den;
}

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') s.push_back(c);
    }
    if (s.empty()) throw ConfigError("empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return {plain_real(s), 0.0};

    s.pop_back();
    // Split at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : plain_real(re), plain_real(im)};
}

void apply_setting(RunConfig& config, std::string_view raw_key, std::string_view raw_value) {
    const std::string key = normalize_key(raw_key);
    const std::string_view value = trim(raw_value);

    if (key == "name") {
        if (value.empty()) bad_value(key, value, "empty name");
        config.name = value;
    } else if (key == "task") {
        if (value == "timeseries") {
            config.task = Task::TimeSeries;
        } else if (value == "alpha-sweep") {
            config.task = Task::AlphaSweep;
        } else {
            bad_value(key, value, "expected timeseries or alpha-sweep");
        }
    } else if (key == "system") {
        if (value == "fermion") {
            config.system = SystemKind::Fermionic;
        } else if (value == "qubit") {
            config.system = SystemKind::Qubit;
        } else {
            bad_value(key, value, "expected fermion or qubit");
        }
    } else if (key == "state") {
        named_state_system(value); // throws ConfigError for unknown names
        config.state = value;
        config.amplitudes.reset();
    } else if (key == "amplitudes") {
        std::vector<Complex> amps;
        std::string_view rest = value;
        while (true) {
            const auto comma = rest.find(',');
            try {
                amps.push_back(parse_complex(rest.substr(0, comma)));
            } catch (const ConfigError& e) {
                bad_value(key, value, e.what());
            }
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        config.amplitudes = std::move(amps);
    } else if (key == "alpha") {
        try {
            config.alpha = parse_complex(value);
        } catch (const ConfigError& e) {
            bad_value(key, value, e.what());
        }
    } else if (key == "temperature_ratio") {
        config.temperature_ratio = checked_real(key, value);
        if (config.temperature_ratio < 0.0) bad_value(key, value, "must be >= 0");
    } else if (key == "j0") {
        config.j0 = checked_real(key, value);
        if (!(config.j0 > 0.0)) bad_value(key, value, "must be > 0");
    } else if (key == "omega_c") {
        config.omega_c = checked_real(key, value);
        if (!(config.omega_c > 0.0)) bad_value(key, value, "must be > 0");
    } else if (key == "omega0") {
        config.omega0 = checked_real(key, value);
        if (config.omega0 < 0.0) bad_value(key, value, "must be >= 0");
    } else if (key == "mode") {
        config.mode = parse_mode(value);
    } else if (key == "n_modes") {
        const int n = parse_int(key, value);
        if (n < 1) bad_value(key, value, "must be >= 1");
        config.n_modes = n;
    } else if (key == "omega_max") {
        const double w = checked_real(key, value);
        if (!(w > 0.0)) bad_value(key, value, "must be > 0");
        config.omega_max = w;
    } else if (key == "t_max") {
        config.t_max = checked_real(key, value);
        if (!(config.t_max > 0.0)) bad_value(key, value, "must be > 0");
    } else if (key == "steps") {
        config.steps = parse_int(key, value);
        if (config.steps < 2) bad_value(key, value, "must be >= 2");
    } else if (key == "out") {
        if (value.empty()) bad_value(key, value, "empty path");
        config.out = std::string(value);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

ParsedConfig parse_config(std::string_view text) {
    ParsedConfig parsed;
    Settings* current = &parsed.shared;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where() + "malformed section header");
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (name.empty()) throw ConfigError(where() + "empty section name");
            for (const auto& [existing, unused] : parsed.sections) {
                if (existing == name) throw ConfigError(where() + "duplicate section '" + name + "'");
            }
            parsed.sections.emplace_back(name, Settings{});
            current = &parsed.sections.back().second;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where() + "expected key = value");
        std::string key = normalize_key(line.substr(0, eq));
        if (key.empty()) throw ConfigError(where() + "empty key");
        if (key == "report" && current != &parsed.shared) {
            throw ConfigError(where() + "report may only be set outside sections");
        }
        current->emplace_back(std::move(key), std::string(trim(line.substr(eq + 1))));
    }
    return parsed;
}

ParsedConfig read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigUnreadable("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw ConfigUnreadable("error while reading config file '" + path.string() + "'");
    try {
        return parse_config(buffer.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

RunPlan make_plan(const ParsedConfig& parsed, const PlanOverrides& overrides, std::string_view report_stem) {
    std::optional<std::filesystem::path> report;
    Settings shared;
    for (const auto& [key, value] : parsed.shared) {
        if (key == "report") {
            if (value.empty()) throw ConfigError("report: empty path");
            report = value;
        } else {
            shared.emplace_back(key, value);
        }
    }

    const auto build = [&](const Settings& section, const std::string* name) {
        RunConfig config;
        for (const auto& [key, value] : shared) apply_setting(config, key, value);
        if (name) config.name = *name;
        for (const auto& [key, value] : section) apply_setting(config, key, value);
        for (const auto& [key, value] : overrides.settings) apply_setting(config, key, value);
        return config;
    };

    RunPlan plan;
    if (parsed.sections.empty()) {
        plan.runs.push_back(build({}, nullptr));
    } else {
        for (const auto& [name, section] : parsed.sections) plan.runs.push_back(build(section, &name));
    }

    if (overrides.out) {
        if (plan.runs.size() != 1) throw ConfigError("--out requires a config with a single run");
        plan.runs.front().out = *overrides.out;
    }
    if (overrides.report) report = *overrides.report;

    const std::filesystem::path dir = overrides.output_dir.value_or(std::filesystem::path{});
    for (auto& run : plan.runs) {
        if (run.out.empty()) run.out = run.name + ".csv";
        if (run.out.is_relative()) run.out = dir / run.out;
    }
    for (std::size_t a = 0; a < plan.runs.size(); ++a) {
        for (std::size_t b = a + 1; b < plan.runs.size(); ++b) {
            if (plan.runs[a].out.lexically_normal() == plan.runs[b].out.lexically_normal()) {
                throw ConfigError("runs '" + plan.runs[a].name + "' and '" + plan.runs[b].name +
                                  "' write the same CSV " + plan.runs[a].out.string());
            }
        }
    }
    plan.report = report.value_or(std::filesystem::path(std::string(report_stem) + ".json"));
    if (plan.report.is_relative()) plan.report = dir / plan.report;
    return plan;
}

ResolvedRun resolve(const RunConfig& config) {
    ResolvedRun run;
    run.config = config;
    const auto fail = [&](const std::string& what) { throw ConfigError(config.name + ": " + what); };

    if (config.task == Task::AlphaSweep) {
        if (!config.system) fail("alpha-sweep requires system");
        run.system = *config.system;
        return run;
    }

    LevelSystem system = make_system(SystemKind::Fermionic);
    try {
        if (config.amplitudes) {
            const auto& amps = *config.amplitudes;
            SystemKind kind;
            if (config.system) {
                kind = *config.system;
            } else if (amps.size() == 6) {
                kind = SystemKind::Fermionic;
            } else if (amps.size() == 4) {
                kind = SystemKind::Qubit;
            } else {
                fail("cannot infer system from " + std::to_string(amps.size()) + " amplitudes");
            }
            system = make_system(kind, config.omega0);
            if (static_cast<int>(amps.size()) != system.dim()) {
                fail("expected " + std::to_string(system.dim()) + " amplitudes for " +
                     std::string(to_string(kind)) + ", got " + std::to_string(amps.size()));
            }
            ComplexVector v(system.dim());
            for (int n = 0; n < system.dim(); ++n) v[n] = amps[static_cast<std::size_t>(n)];
            const double norm = v.norm();
            const double defect = std::abs(norm - 1.0);
            if (defect > kAmplitudeNormReject) {
                std::ostringstream os;
                os << "amplitudes have norm " << norm << " (must be 1 within " << kAmplitudeNormReject << ")";
                fail(os.str());
            }
            if (defect > kNormTol) {
                std::ostringstream os;
                os << "amplitudes renormalized (norm deviated from 1 by " << defect << ")";
                run.warnings.push_back(os.str());
            }
            run.psi0 = StateVector::normalized(system, v);
        } else {
            const SystemKind kind = named_state_system(config.state);
            if (config.system && *config.system != kind) {
                fail("state '" + config.state + "' belongs to the " + std::string(to_string(kind)) +
                     " system, not " + std::string(to_string(*config.system)));
            }
            if (config.alpha && !named_state_uses_alpha(config.state)) {
                run.warnings.push_back("alpha ignored for state '" + config.state + "'");
            }
            run.psi0 = config.alpha ? named_state(config.state, *config.alpha, config.omega0)
                                    : named_state(config.state, Complex{kInvSqrt2, 0.0},
                                                  config.omega0);
        }
        run.system = run.psi0->system().kind();

        run.params.j0 = config.j0;
        run.params.omega_c = config.omega_c;
        run.params.beta = BathParams::beta_from_temperature_ratio(config.temperature_ratio, config.omega_c);
        run.params.mode = config.mode;
        if (auto* d = std::get_if<DiscreteModes>(&run.params.mode)) {
            if (config.n_modes) d->n_modes = *config.n_modes;
            if (config.omega_max) d->omega_max = *config.omega_max;
        } else if (config.n_modes || config.omega_max) {
            run.warnings.push_back("n_modes/omega_max ignored for mode " + mode_name(config.mode));
        }
        for (auto& w : run.params.validate()) run.warnings.push_back(std::move(w));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return run;
}

} // namespace coldeph
