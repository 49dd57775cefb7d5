#include "coldeph/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "coldeph/errors.hpp"

namespace coldeph {

namespace {

ComplexVector amplitudes_of(std::initializer_list<Complex> values) {
    ComplexVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index k = 0;
    for (Complex c : values) v[k++] = c;
    return v;
}

ComplexVector real_amplitudes(std::initializer_list<double> values) {
    ComplexVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index k = 0;
    for (double c : values) v[k++] = Complex{c, 0.0};
    return v;
}

// Parses "slater_ij" with single digits i, j. Returns false when the name
// does not have that shape.
bool parse_slater_name(std::string_view name, int& i, int& j) {
    constexpr std::string_view prefix = "slater_";
    if (name.size() != prefix.size() + 2 || name.substr(0, prefix.size()) != prefix) return false;
    const char a = name[prefix.size()];
    const char b = name[prefix.size() + 1];
    if (a < '0' || a > '9' || b < '0' || b > '9') return false;
    i = a - '0';
    j = b - '0';
    return true;
}

// "psi3" -> 3, "q2" -> 2; 0 when the name is not of the form prefix<digit>.
int parse_basis_name(std::string_view name, std::string_view prefix) {
    if (name.size() != prefix.size() + 1 || name.substr(0, prefix.size()) != prefix) return 0;
    const char d = name.back();
    return (d >= '1' && d <= '9') ? d - '0' : 0;
}

Complex dfs_beta(Complex alpha) {
    const double a2 = std::norm(alpha);
    if (!(a2 <= 1.0 + kNormTol)) {
        std::ostringstream os;
        os << "dfs state: |alpha| = " << std::sqrt(a2) << " exceeds 1";
        throw std::invalid_argument(os.str());
    }
    return Complex{std::sqrt(std::max(0.0, 1.0 - a2)), 0.0};
}

[[noreturn]] void unknown_state(std::string_view name) {
    throw ConfigError("unknown state name '" + std::string(name) + "'");
}

} // namespace

std::string_view to_string(SystemKind kind) {
    return kind == SystemKind::Fermionic ? "fermion" : "qubit";
}

LevelSystem LevelSystem::make(SystemKind kind, double omega0) {
    if (!(omega0 >= 0.0) || !std::isfinite(omega0)) {
        throw std::invalid_argument("make_system: omega0 must be finite and >= 0");
    }
    LevelSystem s;
    s.kind_ = kind;
    s.omega0_ = omega0;
    if (kind == SystemKind::Fermionic) {
        s.labels_ = {"|2,2>", "|2,1>", "|2,0>", "|2,-1>", "|2,-2>", "|0,0>"};
        s.pointer_ = {2.0, 1.0, 0.0, -1.0, -2.0, 0.0};
    } else {
        s.labels_ = {"|00>", "|01>", "|10>", "|11>"};
        s.pointer_ = {1.0, 0.0, 0.0, -1.0};
    }
    s.energies_.reserve(s.pointer_.size());
    for (double l : s.pointer_) s.energies_.push_back(omega0 * l);
    return s;
}

StateVector::StateVector(LevelSystem system, ComplexVector amplitudes)
    : system_(std::move(system)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != system_.dim()) {
        std::ostringstream os;
        os << "StateVector: " << amplitudes_.size() << " amplitudes for a system of dimension "
           << system_.dim();
        throw std::invalid_argument(os.str());
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol) {
        std::ostringstream os;
        os.precision(17);
        os << "StateVector: squared norm " << norm2 << " is not 1";
        throw std::invalid_argument(os.str());
    }
}

StateVector StateVector::normalized(LevelSystem system, ComplexVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("StateVector: cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return StateVector(std::move(system), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(LevelSystem system, ComplexMatrix matrix)
    : system_(std::move(system)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != system_.dim() || matrix_.cols() != system_.dim()) {
        throw std::invalid_argument("DensityMatrix: matrix dimension does not match the system");
    }
    if (!is_hermitian(matrix_)) {
        std::ostringstream os;
        os << "DensityMatrix: not Hermitian (defect " << hermiticity_defect(matrix_) << ")";
        throw NumericError(os.str());
    }
    const double trace = matrix_.trace().real();
    if (std::abs(trace - 1.0) > kTraceTol) {
        std::ostringstream os;
        os.precision(17);
        os << "DensityMatrix: trace " << trace << " is not 1";
        throw NumericError(os.str());
    }
    const std::vector<double> ev = hermitian_eigenvalues(matrix_);
    if (ev.back() < -kPsdTol) {
        std::ostringstream os;
        os << "DensityMatrix: negative eigenvalue " << ev.back();
        throw NumericError(os.str());
    }
}

StateVector basis_state(const LevelSystem& system, int n) {
    if (n < 0 || n >= system.dim()) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    ComplexVector v = ComplexVector::Zero(system.dim());
    v[n] = 1.0;
    return StateVector(system, std::move(v));
}

StateVector slater_state(const LevelSystem& system, int i, int j) {
    if (system.kind() != SystemKind::Fermionic) {
        throw std::invalid_argument("slater_state: requires the fermionic system");
    }
    if (i < 1 || i > 4 || j < 1 || j > 4) {
        throw std::invalid_argument("slater_state: single-particle indices must be in 1..4");
    }
    if (i == j) {
        throw std::invalid_argument("slater_state: i == j antisymmetrizes to zero");
    }
    const double sign = i < j ? 1.0 : -1.0;
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);

    ComplexVector v = ComplexVector::Zero(6);
    switch (lo * 10 + hi) {
        case 12: v[0] = 1.0; break;
        case 13: v[1] = 1.0; break;
        case 24: v[3] = 1.0; break;
        case 34: v[4] = 1.0; break;
        case 14: v[2] = kInvSqrt2; v[5] = kInvSqrt2; break;
        case 23: v[2] = -kInvSqrt2; v[5] = kInvSqrt2; break;
        default: break;
    }
    return StateVector(system, sign * v);
}

SystemKind named_state_system(std::string_view name) {
    int i = 0;
    int j = 0;
    if (name == "dfs_fermion" || name == "f24" || name == "f15" || name == "f1234" ||
        parse_basis_name(name, "psi") != 0 || parse_slater_name(name, i, j)) {
        return SystemKind::Fermionic;
    }
    if (name == "dfs_qubit" || name == "bell_phi" || name == "q14" || name == "q1234" ||
        name == "q123_4" || parse_basis_name(name, "q") != 0) {
        return SystemKind::Qubit;
    }
    unknown_state(name);
}

bool named_state_uses_alpha(std::string_view name) {
    return name == "dfs_fermion" || name == "dfs_qubit";
}

const std::vector<std::string>& named_state_vocabulary() {
    static const std::vector<std::string> names = {
        "dfs_fermion", "dfs_qubit", "bell_phi", "f24",  "f15",  "q14",  "f1234", "q1234", "q123_4",
        "psi1",        "psi2",      "psi3",     "psi4", "psi5", "psi6", "q1",    "q2",    "q3",
        "q4"};
    return names;
}

StateVector named_state(std::string_view name, Complex alpha, double omega0) {
    const SystemKind kind = named_state_system(name);
    LevelSystem system = LevelSystem::make(kind, omega0);

    if (name == "dfs_fermion") {
        const Complex beta = dfs_beta(alpha);
        return StateVector::normalized(system, amplitudes_of({0, 0, alpha, 0, 0, beta}));
    }
    if (name == "dfs_qubit") {
        const Complex beta = dfs_beta(alpha);
        return StateVector::normalized(system, amplitudes_of({0, alpha, beta, 0}));
    }
    if (name == "bell_phi") return StateVector(system, real_amplitudes({0, kInvSqrt2, kInvSqrt2, 0}));
    if (name == "f24") return StateVector(system, real_amplitudes({0, kInvSqrt2, 0, kInvSqrt2, 0, 0}));
    if (name == "f15") return StateVector(system, real_amplitudes({kInvSqrt2, 0, 0, 0, kInvSqrt2, 0}));
    if (name == "q14") return StateVector(system, real_amplitudes({kInvSqrt2, 0, 0, kInvSqrt2}));
    if (name == "f1234") return StateVector(system, real_amplitudes({0.5, 0.5, 0.5, 0.5, 0, 0}));
    if (name == "q1234") return StateVector(system, real_amplitudes({0.5, 0.5, 0.5, 0.5}));
    if (name == "q123_4") {
        const double a = std::sqrt(0.2);
        return StateVector::normalized(system, real_amplitudes({a, a, a, std::sqrt(0.4)}));
    }

    int i = 0;
    int j = 0;
    if (parse_slater_name(name, i, j)) {
        if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) unknown_state(name);
        return slater_state(system, i, j);
    }
    if (const int n = parse_basis_name(name, "psi"); n >= 1 && n <= 6) return basis_state(system, n - 1);
    if (const int n = parse_basis_name(name, "q"); n >= 1 && n <= 4) return basis_state(system, n - 1);
    unknown_state(name);
}

DensityMatrix pure_density(const StateVector& psi) {
    const ComplexVector& a = psi.amplitudes();
    ComplexMatrix rho = a * a.adjoint();
    return DensityMatrix(psi.system(), std::move(rho));
}

} // namespace coldeph
