// channel.hpp: exact collective pure-dephasing channel
//
// A system with pointer eigenvalues L_n and energies E_n, coupled through its
// pointer observable to a thermal bosonic bath with spectral density
//
//     J(w) = 4 J0 w exp(-w / wc),
//
// evolves entrywise as
//
//     rho_mn(t) = rho_mn(0) exp(i (E_n - E_m) t) f_mn(t)
//     f_mn(t)   = exp(-(L_m - L_n)^2 Gamma(t)) exp(-i (L_m^2 - L_n^2) r(t)),
//
// with r = Delta - Theta. Diagonal entries and coherences inside a degenerate
// pointer eigenspace (L_m == L_n, in particular the L = 0 decoherence-free
// subspace) are untouched.
//
// The bath functions are available in four evaluation modes:
//   ClosedFormZeroT  Gamma = J0/8 ln(1 + wc^2 t^2), Delta = atan(wc t), Theta = wc t
//   ClosedFormLowT   the zero-T form plus J0/4 ln[sinh(pi t/beta)/(pi t/beta)];
//                    valid for wc*beta >> 1
//   Quadrature       adaptive Gauss-Kronrod integration of the continuum
//                    integrals (Gamma carries J0/2, Delta and Theta carry no J0)
//   DiscreteModes    finite sum over n equally spaced bath modes on (0, w_max],
//                    rescaled to the continuum normalization above

#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "coldeph/hilbert.hpp"
#include "coldeph/numerics.hpp"

namespace coldeph {

struct ClosedFormZeroT {
    friend bool operator==(const ClosedFormZeroT&, const ClosedFormZeroT&) = default;
};
struct ClosedFormLowT {
    friend bool operator==(const ClosedFormLowT&, const ClosedFormLowT&) = default;
};
struct Quadrature {
    friend bool operator==(const Quadrature&, const Quadrature&) = default;
};
struct DiscreteModes {
    int n_modes{4000};
    double omega_max{40.0}; // absolute frequency, not in units of wc
    friend bool operator==(const DiscreteModes&, const DiscreteModes&) = default;
};

using BathMode = std::variant<ClosedFormZeroT, ClosedFormLowT, Quadrature, DiscreteModes>;

std::string mode_name(const BathMode& mode);

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

// Below this wc*beta the low-temperature closed form is rejected.
inline constexpr double kLowTMinOmegaBeta = 10.0;
// Below this wc*beta the low-temperature closed form is accepted with a warning.
inline constexpr double kLowTWarnOmegaBeta = 50.0;

struct BathParams {
    double j0{5.0};
    double omega_c{1.0};
    double beta{kInfiniteBeta}; // inverse temperature, k_B = 1; infinity encodes T = 0
    BathMode mode{ClosedFormLowT{}};

    bool zero_temperature() const { return beta == kInfiniteBeta; }

    // beta from the ratio T / T_c with T_c = omega_c; ratio 0 gives T = 0.
    static double beta_from_temperature_ratio(double ratio, double omega_c);

    // Throws std::invalid_argument when an invariant fails; returns human
    // readable warnings (currently: low-T closed form with wc*beta < 50).
    std::vector<std::string> validate() const;

    friend bool operator==(const BathParams&, const BathParams&) = default;
};

struct BathFunctions {
    double gamma{0.0};
    double delta{0.0};
    double theta{0.0};

    double r() const { return delta - theta; }
};

// Throws std::invalid_argument for t < 0 or invalid params.
BathFunctions bath_functions(const BathParams& params, double t);

// ln(sinh x / x) for x >= 0, accurate for small x and overflow-free for large x.
double log_sinhc(double x);

struct DephasingFactors {
    double t{0.0};
    ComplexMatrix factors; // F_mn = exp(i(E_n - E_m)t) f_mn(t)
};

DephasingFactors dephasing_factors(const LevelSystem& system, const BathParams& params, double t);

// Same, from precomputed bath functions.
DephasingFactors dephasing_factors(const LevelSystem& system, const BathFunctions& bath, double t);

// Hadamard product rho0 .* F. The result is validated as a density matrix;
// NumericError when that fails.
DensityMatrix evolve(const DensityMatrix& rho0, const BathParams& params, double t);

DensityMatrix evolve(const DensityMatrix& rho0, const BathFunctions& bath, double t);

} // namespace coldeph
