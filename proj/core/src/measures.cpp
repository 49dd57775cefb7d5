#include "coldeph/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coldeph/errors.hpp"

namespace coldeph {

SpinFlipConvention SpinFlipConvention::fermionic() {
    SpinFlipConvention c;
    c.kind = SystemKind::Fermionic;
    c.flip = ComplexMatrix::Zero(6, 6);
    c.flip(0, 4) = 1.0;
    c.flip(1, 3) = -1.0;
    c.flip(2, 2) = 1.0;
    c.flip(3, 1) = -1.0;
    c.flip(4, 0) = 1.0;
    c.flip(5, 5) = 1.0;
    c.phase_fix = ComplexMatrix::Identity(6, 6);
    c.phase_fix(5, 5) = Complex{0.0, 1.0};
    return c;
}

SpinFlipConvention SpinFlipConvention::qubit() {
    SpinFlipConvention c;
    c.kind = SystemKind::Qubit;
    // sigma_y x sigma_y in the computational basis |00>,|01>,|10>,|11>
    c.flip = ComplexMatrix::Zero(4, 4);
    c.flip(0, 3) = -1.0;
    c.flip(1, 2) = 1.0;
    c.flip(2, 1) = 1.0;
    c.flip(3, 0) = -1.0;
    c.phase_fix = ComplexMatrix::Identity(4, 4);
    return c;
}

SpinFlipConvention SpinFlipConvention::for_system(SystemKind kind) {
    return kind == SystemKind::Fermionic ? fermionic() : qubit();
}

ComplexMatrix tilde(const ComplexMatrix& rho, const SpinFlipConvention& conv) {
    if (rho.rows() != conv.flip.rows() || rho.cols() != conv.flip.cols()) {
        std::ostringstream os;
        os << "tilde: " << rho.rows() << "x" << rho.cols() << " matrix does not match the "
           << to_string(conv.kind) << " convention (dimension " << conv.flip.rows() << ")";
        throw std::invalid_argument(os.str());
    }
    const ComplexMatrix& P = conv.phase_fix;
    const ComplexMatrix& M = conv.flip;
    // Coordinates in the phased basis, conjugate and flip there, then map back.
    const ComplexMatrix phased = P.adjoint() * rho * P;
    const ComplexMatrix flipped = M * phased.conjugate() * M;
    return P * flipped * P.adjoint();
}

ComplexMatrix tilde(const DensityMatrix& rho) {
    return tilde(rho.matrix(), SpinFlipConvention::for_system(rho.system().kind()));
}

double concurrence_margin(const DensityMatrix& rho) {
    const std::vector<double> lambdas = product_spectrum_sqrt(rho.matrix(), tilde(rho));
    return lambdas.front() - std::accumulate(lambdas.begin() + 1, lambdas.end(), 0.0);
}

double concurrence(const DensityMatrix& rho) {
    const double c = concurrence_margin(rho);
    if (c > 1.0 + kConcurrenceOvershootTol) {
        std::ostringstream os;
        os.precision(17);
        os << "concurrence: value " << c << " exceeds 1; spin-flip convention or input is inconsistent";
        throw NumericError(os.str());
    }
    return std::clamp(c, 0.0, 1.0);
}

double coherence(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j) sum += std::abs(m(i, j));
        }
    }
    return sum;
}

double linear_entropy(const DensityMatrix& rho) {
    return 1.0 - rho.matrix().cwiseAbs2().sum();
}

} // namespace coldeph
