// numerics.hpp: small dense complex linear algebra (dimension <= 8)
//
// Hermitian spectra, PSD square roots and the square-rooted spectrum of a
// PSD product. Everything here is a pure function of its arguments.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace coldeph {

inline constexpr int kMaxDim = 8;

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using RealVector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

// Relative Hermiticity tolerance: max |A_mn - conj(A_nm)| <= tol * max |A_mn|.
inline constexpr double kHermitianTol = 1e-12;
// Eigenvalues below -kPsdTol mark a matrix as not positive semidefinite.
inline constexpr double kPsdTol = 1e-10;

// max_mn |A_mn - conj(A_nm)|
double hermiticity_defect(const ComplexMatrix& a);

// max_mn |A_mn|
double max_abs_entry(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double rel_tol = kHermitianTol);

struct HermitianEigensystem {
    RealVector values;     // descending
    ComplexMatrix vectors; // column k belongs to values[k]
};

// Throws std::invalid_argument for non-square input, dimension outside
// [1, kMaxDim], or Hermiticity defect beyond kHermitianTol.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a);

// Real eigenvalues in descending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Hermitian square root of a PSD matrix. Eigenvalues in [-kPsdTol, 0] and
// those below the solver's backward-error level are treated as 0.
// Throws NumericError when an eigenvalue is below -kPsdTol.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

// Square roots of the eigenvalues of rho * rho_tilde, descending.
//
// Computed from the Hermitian congruence sqrt(rho) rho_tilde sqrt(rho), which
// is similar to the product, so only a Hermitian solver is needed. Negative
// and numerically-zero eigenvalues are clipped to 0 before the square root.
std::vector<double> product_spectrum_sqrt(const ComplexMatrix& rho, const ComplexMatrix& rho_tilde);

} // namespace coldeph
