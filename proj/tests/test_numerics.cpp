#include <doctest.h>

#include <random>

#include "coldeph/errors.hpp"
#include "coldeph/numerics.hpp"
#include "support.hpp"

using namespace coldeph;

TEST_SUITE("numerics") {

TEST_CASE("eigenvalues of a diagonal matrix come back sorted descending") {
    ComplexMatrix a = ComplexMatrix::Zero(4, 4);
    a(0, 0) = 0.1;
    a(1, 1) = 0.7;
    a(2, 2) = -0.3;
    a(3, 3) = 0.5;
    const auto ev = hermitian_eigenvalues(a);
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(ev[3] == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("eigensystem reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(11);
    for (int d : {2, 4, 6, 8}) {
        for (int rep = 0; rep < 20; ++rep) {
            const ComplexMatrix a = gen::random_mixed(rng, d, d) - 0.3 * ComplexMatrix::Identity(d, d);
            const auto es = hermitian_eigensystem(a);
            const ComplexMatrix back = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
            CHECK((back - a).cwiseAbs().maxCoeff() < 1e-13);
            for (int k = 1; k < d; ++k) CHECK(es.values[k - 1] >= es.values[k]);
        }
    }
}

TEST_CASE("non-Hermitian and oversized input is rejected") {
    ComplexMatrix a = ComplexMatrix::Identity(3, 3);
    a(0, 1) = 0.2;
    CHECK_THROWS_AS(hermitian_eigenvalues(a), std::invalid_argument);
    CHECK_FALSE(is_hermitian(a));
    CHECK(hermiticity_defect(a) == doctest::Approx(0.2));
    CHECK(max_abs_entry(a) == doctest::Approx(1.0));
    ComplexMatrix rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(hermitian_eigenvalues(rect), std::invalid_argument);
}

TEST_CASE("psd_sqrt squares back and rejects negative spectra") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        const ComplexMatrix rho = gen::random_mixed(rng, 6, 1 + rep % 6);
        const ComplexMatrix s = psd_sqrt(rho);
        CHECK(is_hermitian(s));
        CHECK((s * s - rho).cwiseAbs().maxCoeff() < 1e-10);
    }
    ComplexMatrix neg = ComplexMatrix::Identity(2, 2);
    neg(1, 1) = -1e-6;
    CHECK_THROWS_AS(psd_sqrt(neg), NumericError);
    neg(1, 1) = -1e-12; // inside the PSD tolerance
    CHECK_NOTHROW(psd_sqrt(neg));
}

TEST_CASE("product spectrum agrees with a general eigensolver on the plain product") {
    std::mt19937_64 rng(17);
    for (int d : {4, 6}) {
        for (int rep = 0; rep < 50; ++rep) {
            const ComplexMatrix a = gen::random_mixed(rng, d, 1 + rep % d);
            const ComplexMatrix b = gen::random_mixed(rng, d, 1 + (rep + 2) % d);
            const auto got = product_spectrum_sqrt(a, b);

            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(a * b), false);
            std::vector<double> want;
            for (Eigen::Index i = 0; i < d; ++i) {
                want.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()[i].real())));
            }
            std::sort(want.rbegin(), want.rend());
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-6));
        }
    }
}

TEST_CASE("structurally zero eigenvalues of a rank-one product stay at zero") {
    std::mt19937_64 rng(23);
    const ComplexVector v = gen::random_amplitudes(rng, 6);
    const ComplexVector w = gen::random_amplitudes(rng, 6);
    const auto l = product_spectrum_sqrt(v * v.adjoint(), w * w.adjoint());
    CHECK(l[0] == doctest::Approx(std::abs(v.dot(w))).epsilon(1e-12));
    for (std::size_t i = 1; i < l.size(); ++i) CHECK(l[i] < 1e-12);
}

}
