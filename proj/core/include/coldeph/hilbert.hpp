// hilbert.hpp: level systems, state vectors, density matrices, named states
//
// Two concrete systems are provided:
//   Fermionic: two identical spin-3/2 fermions, antisymmetric subspace in the
//              total angular momentum basis |2,2>,|2,1>,|2,0>,|2,-1>,|2,-2>,|0,0>
//   Qubit:     two distinguishable qubits, computational basis |00>,|01>,|10>,|11>
// The pointer observable is J_z in both cases and H_S = omega0 * J_z.
//
// Indices in this header are 0-based; labels and state names follow the usual
// 1-based physics numbering (psi1..psi6, slater_12, ...).

#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "coldeph/numerics.hpp"

namespace coldeph {

enum class SystemKind { Fermionic, Qubit };

std::string_view to_string(SystemKind kind);

class LevelSystem {
public:
    // omega0 >= 0 is the level splitting; throws std::invalid_argument otherwise.
    static LevelSystem make(SystemKind kind, double omega0 = 0.0);

    SystemKind kind() const { return kind_; }
    int dim() const { return static_cast<int>(pointer_.size()); }
    double omega0() const { return omega0_; }

    const std::vector<std::string>& labels() const { return labels_; }
    // Pointer eigenvalues L_n (eigenvalues of J_z).
    const std::vector<double>& pointer() const { return pointer_; }
    // Energies E_n = omega0 * L_n.
    const std::vector<double>& energies() const { return energies_; }

    friend bool operator==(const LevelSystem&, const LevelSystem&) = default;

private:
    LevelSystem() = default;

    SystemKind kind_{SystemKind::Fermionic};
    double omega0_{0.0};
    std::vector<std::string> labels_;
    std::vector<double> pointer_;
    std::vector<double> energies_;
};

inline LevelSystem make_system(SystemKind kind, double omega0 = 0.0) {
    return LevelSystem::make(kind, omega0);
}

inline constexpr double kNormTol = 1e-12;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

class StateVector {
public:
    // Throws std::invalid_argument when the dimension does not match or the
    // norm differs from 1 by more than kNormTol.
    StateVector(LevelSystem system, ComplexVector amplitudes);

    // Rescales to unit norm; throws for a zero vector.
    static StateVector normalized(LevelSystem system, ComplexVector amplitudes);

    const LevelSystem& system() const { return system_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    Complex operator[](int n) const { return amplitudes_[n]; }

private:
    LevelSystem system_;
    ComplexVector amplitudes_;
};

inline constexpr double kTraceTol = 1e-12;

class DensityMatrix {
public:
    // Validates Hermiticity (kHermitianTol), trace (kTraceTol) and
    // eigenvalues >= -kPsdTol. Throws NumericError on violation and
    // std::invalid_argument on a dimension mismatch.
    DensityMatrix(LevelSystem system, ComplexMatrix matrix);

    const LevelSystem& system() const { return system_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    Complex operator()(int m, int n) const { return matrix_(m, n); }
    int dim() const { return static_cast<int>(matrix_.rows()); }

private:
    LevelSystem system_;
    ComplexMatrix matrix_;
};

// Standard basis vector |n> (0-based n).
StateVector basis_state(const LevelSystem& system, int n);

// Antisymmetrized two-fermion state (|ij> - |ji>)/sqrt(2) for single-particle
// indices i, j in {1,2,3,4} (|1> = |3/2,3/2>, ..., |4> = |3/2,-3/2>), expressed
// in the antisymmetric total angular momentum basis. slater_state(j, i) is
// -slater_state(i, j). Throws std::invalid_argument for i == j or an index out
// of range, or when system is not fermionic.
StateVector slater_state(const LevelSystem& system, int i, int j);

// Named initial states. `alpha` is only used by the DFS families, whose
// partner coefficient is beta = sqrt(1 - |alpha|^2) >= 0.
//
//   dfs_fermion   alpha|psi3> + beta|psi6>
//   dfs_qubit     alpha|01>   + beta|10>
//   bell_phi      (|01> + |10>)/sqrt(2)
//   f24           (|psi2> + |psi4>)/sqrt(2)
//   f15           (|psi1> + |psi5>)/sqrt(2)
//   q14           (|00> + |11>)/sqrt(2)
//   f1234         (|psi1> + |psi2> + |psi3> + |psi4>)/2
//   q1234         (|00> + |01> + |10> + |11>)/2
//   q123_4        sqrt(0.2)(|00> + |01> + |10>) + sqrt(0.4)|11>
//   psi1..psi6    fermionic basis states
//   q1..q4        qubit basis states
//   slater_ij     slater_state(i, j), i != j in 1..4
//
// Throws ConfigError for an unknown name and std::invalid_argument for
// |alpha| > 1.
StateVector named_state(std::string_view name, Complex alpha = Complex{kInvSqrt2, 0.0},
                        double omega0 = 0.0);

// System kind a named state lives in; throws ConfigError for unknown names.
SystemKind named_state_system(std::string_view name);

// True for names whose definition depends on alpha.
bool named_state_uses_alpha(std::string_view name);

// All accepted names except the slater_ij family.
const std::vector<std::string>& named_state_vocabulary();

// |psi><psi|
DensityMatrix pure_density(const StateVector& psi);

} // namespace coldeph
