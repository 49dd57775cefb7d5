#include "coldeph/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "coldeph/errors.hpp"

namespace coldeph {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1 || a.rows() > kMaxDim) {
        std::ostringstream os;
        os << who << ": expected a square matrix of dimension 1.." << kMaxDim << ", got " << a.rows()
           << "x" << a.cols();
        throw std::invalid_argument(os.str());
    }
}

void require_hermitian(const ComplexMatrix& a, const char* who) {
    const double defect = hermiticity_defect(a);
    const double scale = max_abs_entry(a);
    if (defect > kHermitianTol * scale) {
        std::ostringstream os;
        os.precision(3);
        os << who << ": matrix is not Hermitian (max |A_mn - conj(A_nm)| = " << defect
           << ", allowed " << kHermitianTol * scale << ")";
        throw std::invalid_argument(os.str());
    }
}

// Eigenvalues at or below this level are indistinguishable from zero for a
// backward-stable Hermitian solver.
double zero_cut(const RealVector& values) {
    const double largest = values.cwiseAbs().maxCoeff();
    return 8.0 * static_cast<double>(values.size()) * std::numeric_limits<double>::epsilon() * largest;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    return 0.5 * (a + a.adjoint());
}

} // namespace

double hermiticity_defect(const ComplexMatrix& a) {
    double worst = 0.0;
    for (Eigen::Index m = 0; m < a.rows(); ++m) {
        for (Eigen::Index n = m; n < a.cols(); ++n) {
            worst = std::max(worst, std::abs(a(m, n) - std::conj(a(n, m))));
        }
    }
    return worst;
}

double max_abs_entry(const ComplexMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    return a.rows() == a.cols() && hermiticity_defect(a) <= rel_tol * max_abs_entry(a);
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a) {
    require_square(a, "hermitian_eigensystem");
    require_hermitian(a, "hermitian_eigensystem");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian_eigensystem: eigensolver did not converge");
    }
    // Eigen returns ascending order.
    HermitianEigensystem out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    require_square(a, "hermitian_eigenvalues");
    require_hermitian(a, "hermitian_eigenvalues");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian_eigenvalues: eigensolver did not converge");
    }
    const RealVector& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::reverse(out.begin(), out.end());
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    HermitianEigensystem es = hermitian_eigensystem(a);
    const double cut = zero_cut(es.values);
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
        double& v = es.values[k];
        if (v < -kPsdTol) {
            std::ostringstream os;
            os << "psd_sqrt: matrix is not PSD (eigenvalue " << v << ")";
            throw NumericError(os.str());
        }
        v = v <= cut ? 0.0 : std::sqrt(v);
    }
    ComplexMatrix root = es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
    return hermitian_part(root);
}

std::vector<double> product_spectrum_sqrt(const ComplexMatrix& rho, const ComplexMatrix& rho_tilde) {
    require_square(rho, "product_spectrum_sqrt");
    require_square(rho_tilde, "product_spectrum_sqrt");
    if (rho.rows() != rho_tilde.rows()) {
        std::ostringstream os;
        os << "product_spectrum_sqrt: dimension mismatch (" << rho.rows() << " vs " << rho_tilde.rows()
           << ")";
        throw std::invalid_argument(os.str());
    }

    const ComplexMatrix root = psd_sqrt(rho);
    const ComplexMatrix congruence = hermitian_part(root * rho_tilde * root);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(congruence, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("product_spectrum_sqrt: eigensolver did not converge");
    }
    const RealVector& mu = solver.eigenvalues();
    const double cut = zero_cut(mu);

    std::vector<double> lambdas(static_cast<std::size_t>(mu.size()));
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
        const double v = mu[k];
        lambdas[static_cast<std::size_t>(k)] = v <= cut ? 0.0 : std::sqrt(v);
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return lambdas;
}

} // namespace coldeph
