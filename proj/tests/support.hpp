// Independent reference implementations and random generators for the tests.
// Nothing here calls into the measures or channel modules.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "coldeph/hilbert.hpp"

namespace oracle {

using coldeph::Complex;
using coldeph::ComplexMatrix;
using coldeph::ComplexVector;

inline const std::vector<double> kFermionL = {2, 1, 0, -1, -2, 0};
inline const std::vector<double> kQubitL = {1, 0, 0, -1};

// Pure two-qubit concurrence 2|a00 a11 - a01 a10|.
inline double qubit_pure_concurrence(const ComplexVector& a) {
    return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

// Pure two-fermion concurrence from the Slater coefficients c_ij of
// psi = sum_{i<j} c_ij a_i^+ a_j^+ |0>: C = 2 |c12 c34 - c13 c24 + c14 c23|.
// With Condon-Shortley Clebsch-Gordan coefficients,
// a_2^+ a_3^+ |0> = (|2,0> - |0,0>)/sqrt(2), the negative of slater_state(2, 3).
inline double fermion_pure_concurrence(const ComplexVector& psi) {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex c12 = psi[0];
    const Complex c13 = psi[1];
    const Complex c24 = psi[3];
    const Complex c34 = psi[4];
    const Complex c14 = s * (psi[2] + psi[5]);
    const Complex c23 = s * (psi[2] - psi[5]);
    return 2.0 * std::abs(c12 * c34 - c13 * c24 + c14 * c23);
}

inline ComplexMatrix sigma_y_sigma_y() {
    Eigen::Matrix2cd sy;
    sy << 0.0, Complex{0, -1}, Complex{0, 1}, 0.0;
    ComplexMatrix k(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) k(2 * a + c, 2 * b + d) = sy(a, b) * sy(c, d);
    return k;
}

// rho~ for fermions, written as K rho^* K^dag with K = P M P (P = diag(1,1,1,1,1,i)).
inline ComplexMatrix fermion_flip_operator() {
    ComplexMatrix m = ComplexMatrix::Zero(6, 6);
    m(0, 4) = 1.0;
    m(4, 0) = 1.0;
    m(1, 3) = -1.0;
    m(3, 1) = -1.0;
    m(2, 2) = 1.0;
    m(5, 5) = 1.0;
    ComplexMatrix p = ComplexMatrix::Identity(6, 6);
    p(5, 5) = Complex{0, 1};
    return p * m * p;
}

// Concurrence via the general (non-Hermitian) eigensolver on rho * rho~.
inline double concurrence_general(const ComplexMatrix& rho) {
    const ComplexMatrix k = rho.rows() == 4 ? sigma_y_sigma_y() : fermion_flip_operator();
    const ComplexMatrix tilde = k * rho.conjugate() * k.adjoint();
    const ComplexMatrix product = rho * tilde;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(product), false);
    std::vector<double> l;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        l.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()[i].real())));
    }
    std::sort(l.rbegin(), l.rend());
    double c = l[0];
    for (std::size_t i = 1; i < l.size(); ++i) c -= l[i];
    return std::max(0.0, c);
}

// Zero-temperature closed-form Gamma and r = atan(x) - x, x = wc t.
inline double gamma_zero_t(double j0, double wc, double t) {
    return j0 / 8.0 * std::log(1.0 + wc * wc * t * t);
}
inline double r_closed(double wc, double t) {
    return std::atan(wc * t) - wc * t;
}

// rho(t) entrywise, from the dephasing rule with given Gamma and r.
inline ComplexMatrix dephase(const ComplexMatrix& rho0, const std::vector<double>& L, double omega0, double t,
                             double gamma, double r) {
    ComplexMatrix out = rho0;
    for (Eigen::Index m = 0; m < rho0.rows(); ++m) {
        for (Eigen::Index n = 0; n < rho0.cols(); ++n) {
            const double lm = L[static_cast<std::size_t>(m)];
            const double ln = L[static_cast<std::size_t>(n)];
            const double phase = omega0 * (ln - lm) * t - (lm * lm - ln * ln) * r;
            out(m, n) *= std::exp(-(lm - ln) * (lm - ln) * gamma) * std::exp(Complex{0.0, phase});
        }
    }
    return out;
}

// Composite Simpson rule on [a, b] with n (even) intervals.
template <class F>
double simpson(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return s * h / 3.0;
}

// Gamma(t) from the continuum integral with cutoff, by brute-force Simpson.
inline double gamma_integral(double j0, double wc, double beta, double t) {
    auto f = [&](double w) {
        if (w == 0.0) return std::isinf(beta) ? 0.0 : t * t / (2.0 * beta);
        const double s = std::sin(0.5 * w * t);
        const double coth = std::isinf(beta) ? 1.0 : 1.0 / std::tanh(0.5 * beta * w);
        return std::exp(-w / wc) * s * s / w * coth;
    };
    return 0.5 * j0 * simpson(f, 0.0, 60.0 * wc, 400000);
}

} // namespace oracle

namespace gen {

using coldeph::Complex;
using coldeph::ComplexVector;

// Haar-random pure state of dimension d.
inline ComplexVector random_amplitudes(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> g;
    ComplexVector v(d);
    for (int n = 0; n < d; ++n) v[n] = Complex{g(rng), g(rng)};
    return v / v.norm();
}

inline coldeph::StateVector random_state(std::mt19937_64& rng, coldeph::SystemKind kind, double omega0 = 0.0) {
    const auto system = coldeph::make_system(kind, omega0);
    return coldeph::StateVector::normalized(system, random_amplitudes(rng, system.dim()));
}

// Random mixed state: convex mixture of `rank` random pure states.
inline coldeph::ComplexMatrix random_mixed(std::mt19937_64& rng, int d, int rank) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    coldeph::ComplexMatrix rho = coldeph::ComplexMatrix::Zero(d, d);
    double total = 0.0;
    std::vector<double> w(static_cast<std::size_t>(rank));
    for (double& x : w) total += (x = u(rng) + 1e-3);
    for (int k = 0; k < rank; ++k) {
        const ComplexVector v = random_amplitudes(rng, d);
        rho += (w[static_cast<std::size_t>(k)] / total) * (v * v.adjoint());
    }
    return rho;
}

// J-basis coordinates of the Slater determinant a_u^+ a_v^+ |0> for
// single-particle vectors u, v (components along |3/2,3/2>, ..., |3/2,-3/2>).
inline ComplexVector slater_from_orbitals(const Eigen::Vector4cd& u, const Eigen::Vector4cd& v) {
    auto c = [&](int i, int j) { return u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]; };
    const double s = 1.0 / std::numbers::sqrt2;
    ComplexVector psi(6);
    psi << c(1, 2), c(1, 3), s * (c(1, 4) + c(2, 3)), c(2, 4), c(3, 4), s * (c(1, 4) - c(2, 3));
    return psi / psi.norm();
}

inline Eigen::Vector4cd random_orbital(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v[i] = Complex{g(rng), g(rng)};
    return v;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace gen
