// analysis.hpp: dynamical regimes, time series and sudden death/birth events
//
// Every initial state falls into one of three regimes according to its
// overlap with the decoherence-free subspace (the L = 0 pointer eigenspace):
//   Invariant   fully inside: rho(t) = rho(0)
//   Orthogonal  no overlap: entanglement and coherence decay monotonically
//   Partial     anything else: entanglement may die at a finite time and
//               possibly revive
//
// Times passed to these functions are physical times; TimeSeries::times is
// the dimensionless wc*t.

#pragma once

#include <string_view>
#include <vector>

#include "coldeph/channel.hpp"
#include "coldeph/hilbert.hpp"

namespace coldeph {

enum class Regime { Invariant, Orthogonal, Partial };
enum class EventKind { Death, Birth };

std::string_view to_string(Regime regime);
std::string_view to_string(EventKind kind);

struct Event {
    EventKind kind{EventKind::Death};
    double time{0.0};
};

inline constexpr double kDfsOverlapTol = 1e-12;

struct RegimeReport {
    double dfs_overlap{0.0}; // squared norm of the projection onto the DFS
    Regime regime{Regime::Partial};
    bool initially_dead{false}; // concurrence(0) <= dead threshold
    std::vector<Event> events;
};

// Diagonal 0/1 projector onto the basis states with L_n = 0.
ComplexMatrix dfs_projector(const LevelSystem& system);

// Overlap and regime only; events are left empty.
RegimeReport classify(const StateVector& psi);

struct TimeSeries {
    std::vector<double> times; // wc * t
    std::vector<double> concurrence;
    std::vector<double> coherence;
    std::vector<double> linear_entropy;

    std::size_t size() const { return times.size(); }
};

// Samples t_k = k * t_max / (n_steps - 1), k = 0 .. n_steps-1.
// Throws std::invalid_argument for n_steps < 2 or t_max <= 0.
TimeSeries time_series(const StateVector& psi0, const BathParams& params, double t_max, int n_steps);

struct EventScanOptions {
    int grid_points{2000};
    // Concurrence at or below this is dead.
    double dead_threshold{1e-12};
    // After a death, concurrence must exceed this before a birth is declared.
    double revive_threshold{1e-9};
    // Bisection stops once the bracket is below time_tolerance * t_max.
    double time_tolerance{1e-9};
};

struct EventScan {
    bool initially_dead{false};
    std::vector<Event> events; // alternating, starting with Death
};

// Scans concurrence on a uniform grid, refines every positive grid-local
// minimum by golden-section search (catches dead windows narrower than the
// grid), and locates each dead/alive transition by bisection. The initial
// rise of an initially-dead state is reported through initially_dead, not as
// an event.
EventScan detect_events(const StateVector& psi0, const BathParams& params, double t_max,
                        const EventScanOptions& options = {});

// The t -> infinity limit of the linear entropy at T = 0: only entries with
// L_m == L_n survive.
double saturation_entropy(const StateVector& psi0);

struct AlphaSweep {
    std::vector<double> alpha;
    std::vector<double> concurrence;
};

// Concurrence of the real-alpha DFS family over alpha in [0, 1].
AlphaSweep alpha_sweep(SystemKind kind, int points = 201);

} // namespace coldeph
