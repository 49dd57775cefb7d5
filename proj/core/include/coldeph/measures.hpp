// measures.hpp: entanglement, coherence and mixedness of a density matrix
//
// Concurrence is max(0, l1 - l2 - ... - ld) where l_i are the square roots of
// the eigenvalues of rho * tilde(rho), descending. The spin flip tilde(.)
// depends on the system:
//   fermions  tilde(rho) = D rho D^-1 with D = M kappa (kappa: complex
//             conjugation), valid in the basis |2,2>,...,|2,-2>, i|0,0>
//   qubits    tilde(rho) = (sy x sy) rho^* (sy x sy)

#pragma once

#include "coldeph/hilbert.hpp"
#include "coldeph/numerics.hpp"

namespace coldeph {

struct SpinFlipConvention {
    SystemKind kind{SystemKind::Fermionic};
    ComplexMatrix flip;      // real symmetric involution M
    ComplexMatrix phase_fix; // diagonal unitary P: phased basis = P * plain basis

    static SpinFlipConvention fermionic();
    static SpinFlipConvention qubit();
    static SpinFlipConvention for_system(SystemKind kind);
};

// Throws std::invalid_argument when the dimension does not match.
ComplexMatrix tilde(const ComplexMatrix& rho, const SpinFlipConvention& conv);
ComplexMatrix tilde(const DensityMatrix& rho);

// Rounding excess above 1 that is clamped silently; larger values throw
// NumericError.
inline constexpr double kConcurrenceOvershootTol = 1e-9;

double concurrence(const DensityMatrix& rho);

// Same, without the max(0, .): l1 - sum_{i>=2} l_i.
double concurrence_margin(const DensityMatrix& rho);

// l1 coherence: sum of |rho_mn| over m != n.
double coherence(const DensityMatrix& rho);

// 1 - Tr rho^2
double linear_entropy(const DensityMatrix& rho);

} // namespace coldeph
