#include "coldeph/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace coldeph {

namespace {

// Upper integration limit in units of wc; the integrands carry exp(-w/wc).
constexpr double kQuadratureCutoff = 50.0;
constexpr int kMinPanels = 64;
constexpr double kPanelRelTol = 1e-12;
constexpr unsigned kPanelMaxDepth = 15;

double coth_half(double beta, double omega) {
    if (beta == kInfiniteBeta) return 1.0;
    return 1.0 / std::tanh(0.5 * beta * omega);
}

template <class F>
double integrate_panels(F&& f, double upper, double t) {
    using Integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
    // At least ~8 panels per oscillation period 2 pi / t of the integrand.
    const double periods = upper * t / (2.0 * std::numbers::pi);
    const int panels = std::max(kMinPanels, static_cast<int>(std::ceil(8.0 * periods)));
    const double width = upper / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = k * width;
        const double b = (k + 1) * width;
        sum += Integrator::integrate(f, a, b, kPanelMaxDepth, kPanelRelTol);
    }
    return sum;
}

BathFunctions closed_form(const BathParams& p, double t, bool thermal) {
    const double x = p.omega_c * t;
    BathFunctions out;
    out.gamma = 0.125 * p.j0 * std::log1p(x * x);
    if (thermal && !p.zero_temperature()) {
        out.gamma += 0.25 * p.j0 * log_sinhc(std::numbers::pi * t / p.beta);
    }
    out.delta = std::atan(x);
    out.theta = x;
    return out;
}

BathFunctions quadrature(const BathParams& p, double t) {
    const double wc = p.omega_c;
    const double beta = p.beta;
    const double upper = kQuadratureCutoff * wc;

    auto gamma_integrand = [=](double w) {
        if (w <= 0.0) {
            // Continuous extension at w = 0.
            return beta == kInfiniteBeta ? 0.0 : t * t / (2.0 * beta);
        }
        const double s = std::sin(0.5 * w * t);
        return std::exp(-w / wc) * s * s / w * coth_half(beta, w);
    };
    auto delta_integrand = [=](double w) {
        if (w <= 0.0) return t;
        return std::exp(-w / wc) * std::sin(w * t) / w;
    };

    BathFunctions out;
    out.gamma = 0.5 * p.j0 * integrate_panels(gamma_integrand, upper, t);
    out.delta = integrate_panels(delta_integrand, upper, t);
    out.theta = wc * t;
    return out;
}

BathFunctions discrete_modes(const BathParams& p, const DiscreteModes& modes, double t) {
    const double dw = modes.omega_max / modes.n_modes;
    double gamma_raw = 0.0;
    double delta_raw = 0.0;
    double theta_raw = 0.0;
    for (int k = 1; k <= modes.n_modes; ++k) {
        const double w = (k - 0.5) * dw;
        const double coupling2 = 4.0 * p.j0 * w * std::exp(-w / p.omega_c) * dw; // |g_k|^2
        const double weight = coupling2 / (w * w);
        const double s = std::sin(0.5 * w * t);
        gamma_raw += 2.0 * weight * s * s * coth_half(p.beta, w);
        delta_raw += weight * std::sin(w * t);
        theta_raw += weight * w * t;
    }
    // The raw mode sums converge to 16x (Gamma) and 4 J0 x (Delta, Theta) the
    // continuum integrals; rescale onto the continuum normalization.
    BathFunctions out;
    out.gamma = gamma_raw / 16.0;
    out.delta = delta_raw / (4.0 * p.j0);
    out.theta = theta_raw / (4.0 * p.j0);
    return out;
}

} // namespace

std::string mode_name(const BathMode& mode) {
    struct Visitor {
        std::string operator()(const ClosedFormZeroT&) const { return "zero-t"; }
        std::string operator()(const ClosedFormLowT&) const { return "low-t"; }
        std::string operator()(const Quadrature&) const { return "quadrature"; }
        std::string operator()(const DiscreteModes&) const { return "discrete"; }
    };
    return std::visit(Visitor{}, mode);
}

double BathParams::beta_from_temperature_ratio(double ratio, double omega_c) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
        throw std::invalid_argument("temperature ratio must be finite and >= 0");
    }
    if (!(omega_c > 0.0)) {
        throw std::invalid_argument("omega_c must be > 0");
    }
    return ratio == 0.0 ? kInfiniteBeta : 1.0 / (ratio * omega_c);
}

std::vector<std::string> BathParams::validate() const {
    std::vector<std::string> warnings;
    if (!(j0 > 0.0) || !std::isfinite(j0)) throw std::invalid_argument("BathParams: j0 must be > 0");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw std::invalid_argument("BathParams: omega_c must be > 0");
    }
    if (!(beta > 0.0)) throw std::invalid_argument("BathParams: beta must be > 0 or infinite");

    if (std::holds_alternative<ClosedFormZeroT>(mode) && !zero_temperature()) {
        throw std::invalid_argument("BathParams: zero-t mode requires T = 0 (beta infinite)");
    }
    if (std::holds_alternative<ClosedFormLowT>(mode) && !zero_temperature()) {
        const double wb = omega_c * beta;
        if (wb < kLowTMinOmegaBeta) {
            std::ostringstream os;
            os << "BathParams: low-t mode requires omega_c*beta >= " << kLowTMinOmegaBeta << " (got " << wb
               << ")";
            throw std::invalid_argument(os.str());
        }
        if (wb < kLowTWarnOmegaBeta) {
            std::ostringstream os;
            os << "low-t closed form used with omega_c*beta = " << wb << " < " << kLowTWarnOmegaBeta
               << "; the low-temperature approximation may be inaccurate";
            warnings.push_back(os.str());
        }
    }
    if (const auto* d = std::get_if<DiscreteModes>(&mode)) {
        if (d->n_modes < 1) throw std::invalid_argument("BathParams: n_modes must be >= 1");
        if (!(d->omega_max > 0.0)) throw std::invalid_argument("BathParams: omega_max must be > 0");
    }
    return warnings;
}

double log_sinhc(double x) {
    x = std::abs(x);
    if (x < 1e-2) {
        const double x2 = x * x;
        return x2 * (1.0 / 6.0 + x2 * (-1.0 / 180.0 + x2 * (1.0 / 2835.0)));
    }
    if (x <= 20.0) return std::log(std::sinh(x) / x);
    return x - std::log(2.0 * x) + std::log1p(-std::exp(-2.0 * x));
}

BathFunctions bath_functions(const BathParams& params, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("bath_functions: t must be finite and >= 0");
    }
    params.validate();
    if (t == 0.0) return {};

    struct Visitor {
        const BathParams& p;
        double t;
        BathFunctions operator()(const ClosedFormZeroT&) const { return closed_form(p, t, false); }
        BathFunctions operator()(const ClosedFormLowT&) const { return closed_form(p, t, true); }
        BathFunctions operator()(const Quadrature&) const { return quadrature(p, t); }
        BathFunctions operator()(const DiscreteModes& d) const { return discrete_modes(p, d, t); }
    };
    return std::visit(Visitor{params, t}, params.mode);
}

DephasingFactors dephasing_factors(const LevelSystem& system, const BathFunctions& bath, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("dephasing_factors: t must be >= 0");
    const int d = system.dim();
    const auto& L = system.pointer();
    const auto& E = system.energies();
    const double r = bath.r();

    DephasingFactors out;
    out.t = t;
    out.factors.resize(d, d);
    for (int m = 0; m < d; ++m) {
        out.factors(m, m) = 1.0;
        for (int n = m + 1; n < d; ++n) {
            const double dl = L[m] - L[n];
            const double magnitude = std::exp(-dl * dl * bath.gamma);
            const double phase = (E[n] - E[m]) * t - (L[m] * L[m] - L[n] * L[n]) * r;
            const Complex f = std::polar(magnitude, phase);
            out.factors(m, n) = f;
            out.factors(n, m) = std::conj(f);
        }
    }
    return out;
}

DephasingFactors dephasing_factors(const LevelSystem& system, const BathParams& params, double t) {
    return dephasing_factors(system, bath_functions(params, t), t);
}

DensityMatrix evolve(const DensityMatrix& rho0, const BathFunctions& bath, double t) {
    const DephasingFactors f = dephasing_factors(rho0.system(), bath, t);
    return DensityMatrix(rho0.system(), rho0.matrix().cwiseProduct(f.factors));
}

DensityMatrix evolve(const DensityMatrix& rho0, const BathParams& params, double t) {
    return evolve(rho0, bath_functions(params, t), t);
}

} // namespace coldeph
