#include "coldeph/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coldeph/measures.hpp"

namespace coldeph {

namespace {

struct Sample {
    double t;
    double c;
};

class ConcurrenceTrace {
public:
    ConcurrenceTrace(const StateVector& psi0, const BathParams& params)
        : rho0_(pure_density(psi0)), params_(params) {}

    double operator()(double t) const {
        return concurrence(evolve(rho0_, bath_functions(params_, t), t));
    }

private:
    DensityMatrix rho0_;
    BathParams params_;
};

// Minimum of f on [a, b] by golden-section search, returning the lowest
// sample seen (the trace can be flat at zero or slightly noisy there).
Sample golden_minimum(const ConcurrenceTrace& f, double a, double b, double tol) {
    constexpr double g = 0.6180339887498949;
    double c1 = b - g * (b - a);
    double c2 = a + g * (b - a);
    double f1 = f(c1);
    double f2 = f(c2);
    Sample best = f1 < f2 ? Sample{c1, f1} : Sample{c2, f2};
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (f1 < f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - g * (b - a);
            f1 = f(c1);
            if (f1 < best.c) best = {c1, f1};
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + g * (b - a);
            f2 = f(c2);
            if (f2 < best.c) best = {c2, f2};
        }
    }
    return best;
}

// Crossing of the predicate c <= threshold between lo and hi, which must
// disagree on it.
double bisect_crossing(const ConcurrenceTrace& f, double lo, double hi, double threshold, double tol) {
    const bool lo_dead = f(lo) <= threshold;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if ((f(mid) <= threshold) == lo_dead) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Invariant: return "invariant";
        case Regime::Orthogonal: return "orthogonal";
        case Regime::Partial: return "partial";
    }
    return "unknown";
}

std::string_view to_string(EventKind kind) {
    return kind == EventKind::Death ? "death" : "birth";
}

ComplexMatrix dfs_projector(const LevelSystem& system) {
    const int d = system.dim();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        if (system.pointer()[static_cast<std::size_t>(n)] == 0.0) p(n, n) = 1.0;
    }
    return p;
}

RegimeReport classify(const StateVector& psi) {
    const ComplexVector projected = dfs_projector(psi.system()) * psi.amplitudes();
    RegimeReport report;
    report.dfs_overlap = std::clamp(projected.squaredNorm(), 0.0, 1.0);
    if (report.dfs_overlap >= 1.0 - kDfsOverlapTol) {
        report.regime = Regime::Invariant;
    } else if (report.dfs_overlap <= kDfsOverlapTol) {
        report.regime = Regime::Orthogonal;
    } else {
        report.regime = Regime::Partial;
    }
    return report;
}

TimeSeries time_series(const StateVector& psi0, const BathParams& params, double t_max, int n_steps) {
    if (n_steps < 2) throw std::invalid_argument("time_series: n_steps must be >= 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("time_series: t_max must be finite and > 0");
    }
    const DensityMatrix rho0 = pure_density(psi0);
    const auto n = static_cast<std::size_t>(n_steps);

    TimeSeries ts;
    ts.times.resize(n);
    ts.concurrence.resize(n);
    ts.coherence.resize(n);
    ts.linear_entropy.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * t_max / static_cast<double>(n - 1);
        const DensityMatrix rho = evolve(rho0, bath_functions(params, t), t);
        ts.times[k] = params.omega_c * t;
        ts.concurrence[k] = concurrence(rho);
        ts.coherence[k] = coherence(rho);
        ts.linear_entropy[k] = linear_entropy(rho);
    }
    return ts;
}

EventScan detect_events(const StateVector& psi0, const BathParams& params, double t_max,
                        const EventScanOptions& options) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("detect_events: t_max must be finite and > 0");
    }
    if (options.grid_points < 3) throw std::invalid_argument("detect_events: grid_points must be >= 3");

    const ConcurrenceTrace trace(psi0, params);
    const double dead = options.dead_threshold;
    const double tol = options.time_tolerance * t_max;
    const auto n = static_cast<std::size_t>(options.grid_points);

    std::vector<Sample> grid(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * t_max / static_cast<double>(n - 1);
        grid[k] = {t, trace(t)};
    }

    // Merge in the refined minima of every positive local dip.
    std::vector<Sample> samples;
    samples.reserve(n + n / 8);
    samples.push_back(grid.front());
    for (std::size_t k = 1; k < n; ++k) {
        if (k + 1 < n && grid[k].c > dead && grid[k].c <= grid[k - 1].c && grid[k].c <= grid[k + 1].c) {
            const Sample lowest = golden_minimum(trace, grid[k - 1].t, grid[k + 1].t, 1e-3 * tol);
            if (lowest.c <= dead) {
                if (lowest.t < grid[k].t) {
                    samples.push_back(lowest);
                    samples.push_back(grid[k]);
                } else {
                    samples.push_back(grid[k]);
                    samples.push_back(lowest);
                }
                continue;
            }
        }
        samples.push_back(grid[k]);
    }

    EventScan scan;
    bool is_dead = samples.front().c <= dead;
    scan.initially_dead = is_dead;
    std::size_t last_dead = 0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const Sample& s = samples[k];
        if (!is_dead) {
            if (s.c <= dead) {
                const double t = bisect_crossing(trace, samples[k - 1].t, s.t, dead, tol);
                scan.events.push_back({EventKind::Death, t});
                is_dead = true;
                last_dead = k;
            }
            continue;
        }
        if (s.c <= dead) {
            last_dead = k;
        } else if (s.c > options.revive_threshold) {
            const bool initial_rise = scan.initially_dead && scan.events.empty();
            if (!initial_rise) {
                const double t =
                    bisect_crossing(trace, samples[last_dead].t, samples[last_dead + 1].t, dead, tol);
                scan.events.push_back({EventKind::Birth, t});
            }
            is_dead = false;
        }
    }
    return scan;
}

double saturation_entropy(const StateVector& psi0) {
    const ComplexVector& a = psi0.amplitudes();
    const auto& L = psi0.system().pointer();
    double surviving = 0.0;
    for (Eigen::Index m = 0; m < a.size(); ++m) {
        for (Eigen::Index n = 0; n < a.size(); ++n) {
            if (L[static_cast<std::size_t>(m)] == L[static_cast<std::size_t>(n)]) {
                surviving += std::norm(a[m] * std::conj(a[n]));
            }
        }
    }
    return 1.0 - surviving;
}

AlphaSweep alpha_sweep(SystemKind kind, int points) {
    if (points < 2) throw std::invalid_argument("alpha_sweep: points must be >= 2");
    const std::string_view name = kind == SystemKind::Fermionic ? "dfs_fermion" : "dfs_qubit";
    AlphaSweep sweep;
    sweep.alpha.reserve(static_cast<std::size_t>(points));
    sweep.concurrence.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        const double alpha = static_cast<double>(k) / static_cast<double>(points - 1);
        sweep.alpha.push_back(alpha);
        sweep.concurrence.push_back(concurrence(pure_density(named_state(name, Complex{alpha, 0.0}))));
    }
    return sweep;
}

} // namespace coldeph
