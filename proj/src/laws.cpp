#include "betaspec/laws.hpp"

#include "betaspec/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace betaspec {

namespace {

void check_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("ContinuousLaw: beta must be positive");
}

void check_gamma(double gamma) {
    if (!std::isfinite(gamma))
        throw std::invalid_argument("ContinuousLaw: gamma must be finite");
    if (gamma < 1.0)
        throw std::domain_error("ContinuousLaw: gamma < 1 is an unsupported regime");
}

} // namespace

ContinuousLaw ContinuousLaw::semicircle(double beta) {
    check_beta(beta);
    ContinuousLaw law;
    law.family_ = LawFamily::Semicircle;
    law.beta_ = beta;
    law.hi_ = 2.0 * std::sqrt(beta);
    law.lo_ = -law.hi_;
    return law;
}

ContinuousLaw ContinuousLaw::marchenko_pastur(double beta, double gamma) {
    check_beta(beta);
    check_gamma(gamma);
    ContinuousLaw law;
    law.family_ = LawFamily::MarchenkoPastur;
    law.beta_ = beta;
    law.gamma_ = gamma;
    const double rg = std::sqrt(gamma);
    law.lo_ = beta * (1.0 - rg) * (1.0 - rg);
    law.hi_ = beta * (1.0 + rg) * (1.0 + rg);
    return law;
}

ContinuousLaw ContinuousLaw::hermite_conditional(double u, double beta) {
    check_beta(beta);
    if (!(u > 0.0 && u <= 1.0))
        throw std::invalid_argument("hermite_conditional: u must lie in (0,1] (u = 0 degenerates to a point mass)");
    ContinuousLaw law;
    law.family_ = LawFamily::HermiteConditional;
    law.beta_ = beta;
    law.u_ = u;
    law.hi_ = 2.0 * std::sqrt(beta * u);
    law.lo_ = -law.hi_;
    return law;
}

ContinuousLaw ContinuousLaw::laguerre_conditional(double u, double beta, double gamma) {
    check_beta(beta);
    check_gamma(gamma);
    if (!(u >= 0.0 && u < 1.0))
        throw std::invalid_argument("laguerre_conditional: u must lie in [0,1) (u = 1 degenerates to a point mass)");
    ContinuousLaw law;
    law.family_ = LawFamily::LaguerreConditional;
    law.beta_ = beta;
    law.gamma_ = gamma;
    law.u_ = u;
    const double c1 = beta * (gamma + 1.0 - 2.0 * u);
    const double c2 = beta * std::sqrt(gamma - u) * std::sqrt(1.0 - u);
    law.lo_ = c1 - 2.0 * c2;
    law.hi_ = c1 + 2.0 * c2;
    return law;
}

bool ContinuousLaw::singular_at_lo() const {
    switch (family_) {
    case LawFamily::Semicircle:
        return false;
    case LawFamily::MarchenkoPastur:
        return gamma_ == 1.0; // L- = 0 and density ~ 1/sqrt(x)
    default:
        return true; // arcsine-type laws diverge at both endpoints
    }
}

bool ContinuousLaw::singular_at_hi() const {
    return family_ == LawFamily::HermiteConditional ||
           family_ == LawFamily::LaguerreConditional;
}

double ContinuousLaw::density(double x) const {
    if (x < lo_ || x > hi_)
        return 0.0;
    switch (family_) {
    case LawFamily::Semicircle:
        return std::sqrt(std::max(0.0, 4.0 * beta_ - x * x)) / (2.0 * M_PI * beta_);
    case LawFamily::MarchenkoPastur: {
        if (x == lo_ || x == hi_) {
            if (x == 0.0)
                throw EndpointError("density: Marchenko-Pastur diverges at x = 0 when gamma = 1");
            return 0.0;
        }
        const double s = (x - lo_) * (hi_ - x);
        return std::sqrt(std::max(0.0, s)) / (2.0 * M_PI * beta_ * x);
    }
    case LawFamily::HermiteConditional: {
        if (x == lo_ || x == hi_)
            throw EndpointError("density: conditional law diverges at its support endpoints");
        const double s = 4.0 * beta_ * u_ - x * x;
        return 1.0 / (M_PI * std::sqrt(std::max(0.0, s)));
    }
    case LawFamily::LaguerreConditional: {
        if (x == lo_ || x == hi_)
            throw EndpointError("density: conditional law diverges at its support endpoints");
        const double c1 = 0.5 * (lo_ + hi_);
        const double two_c2 = 0.5 * (hi_ - lo_); // half-width of the support = 2 c2
        const double s = two_c2 * two_c2 - (x - c1) * (x - c1);
        return 1.0 / (M_PI * std::sqrt(std::max(0.0, s)));
    }
    }
    return 0.0;
}

double ContinuousLaw::cdf(double x, double) const {
    if (x <= lo_)
        return 0.0;
    if (x >= hi_)
        return 1.0;
    double v = 0.0;
    switch (family_) {
    case LawFamily::Semicircle: {
        const double r = 2.0 * std::sqrt(beta_);
        v = 0.5 + x * std::sqrt(4.0 * beta_ - x * x) / (4.0 * M_PI * beta_) +
            std::asin(x / r) / M_PI;
        break;
    }
    case LawFamily::MarchenkoPastur: {
        // With x = beta (gamma + 1 + 2 sqrt(gamma) cos(theta)), theta in [0, pi]:
        // F = (gamma+1)(pi-theta)/(2 pi) + sqrt(gamma) sin(theta)/pi
        //     - (gamma-1)/(2 pi) (pi - 2 atan(q tan(theta/2))),  q = (sqrt(gamma)-1)/(sqrt(gamma)+1).
        const double rg = std::sqrt(gamma_);
        const double c = std::clamp((x / beta_ - (gamma_ + 1.0)) / (2.0 * rg), -1.0, 1.0);
        const double theta = std::acos(c);
        v = (gamma_ + 1.0) * (M_PI - theta) / (2.0 * M_PI) + rg * std::sin(theta) / M_PI;
        if (gamma_ > 1.0) {
            const double q = (rg - 1.0) / (rg + 1.0);
            const double corr = theta == M_PI ? 0.0
                                              : M_PI - 2.0 * std::atan(q * std::tan(0.5 * theta));
            v -= (gamma_ - 1.0) / (2.0 * M_PI) * corr;
        }
        break;
    }
    case LawFamily::HermiteConditional:
        v = 0.5 + std::asin(x / (2.0 * std::sqrt(beta_ * u_))) / M_PI;
        break;
    case LawFamily::LaguerreConditional: {
        const double c1 = 0.5 * (lo_ + hi_);
        const double half_width = 0.5 * (hi_ - lo_);
        v = 0.5 + std::asin((x - c1) / half_width) / M_PI;
        break;
    }
    }
    return std::clamp(v, 0.0, 1.0);
}

double ContinuousLaw::moment(unsigned k, double quad_tol) const {
    auto f = [this, k](double x) {
        double p = 1.0;
        for (unsigned i = 0; i < k; ++i)
            p *= x;
        return p * density(x);
    };
    return integrate_sqrt_endpoints(f, lo_, hi_, quad_tol, true, true);
}

double ContinuousLaw::normalization(double quad_tol) const {
    auto f = [this](double x) { return density(x); };
    return integrate_sqrt_endpoints(f, lo_, hi_, quad_tol, true, true);
}

double mode_eigenvalue(const EnsembleParams& params, double u, double omega) {
    params.validate();
    if (!(u >= 0.0 && u <= 1.0))
        throw std::invalid_argument("mode_eigenvalue: u must lie in [0,1]");
    if (!(std::fabs(omega) <= M_PI))
        throw std::invalid_argument("mode_eigenvalue: omega must lie in [-pi,pi]");
    if (params.kind == EnsembleKind::Hermite)
        return 2.0 * std::sqrt(params.beta * u) * std::cos(omega);
    const LimitWeights w = limit_weights(params, u);
    return w.loop_weight + 2.0 * w.edge_weight * std::cos(omega);
}

double laguerre_u_max(double x, double beta, double gamma) {
    check_beta(beta);
    check_gamma(gamma);
    const double rg = std::sqrt(gamma);
    const double lminus = beta * (1.0 - rg) * (1.0 - rg);
    const double lplus = beta * (1.0 + rg) * (1.0 + rg);
    if (!(x > lminus && x < lplus))
        return 0.0;
    const double u = (lplus - x) * (x - lminus) / (4.0 * beta * x);
    return std::clamp(u, 0.0, 1.0);
}

double expected_density_numeric(const EnsembleParams& params, double x,
                                double quad_tol) {
    params.validate();
    if (!(quad_tol > 0.0))
        throw std::invalid_argument("expected_density_numeric: quad_tol must be positive");
    const double beta = params.beta;
    if (params.kind == EnsembleKind::Hermite) {
        const double edge = 2.0 * std::sqrt(beta);
        if (!(x > -edge && x < edge))
            return 0.0;
        const double u_min = x * x / (4.0 * beta);
        auto f = [beta, x](double u) {
            return 1.0 / (M_PI * std::sqrt(4.0 * beta * u - x * x));
        };
        return integrate_sqrt_endpoints(f, u_min, 1.0, quad_tol, true, false);
    }
    const double u_max = laguerre_u_max(x, beta, params.gamma);
    if (u_max == 0.0)
        return 0.0;
    // 4 c2(u)^2 - (x - c1(u))^2 is linear in u: K - 4 beta x u with
    // K = (L+ - x)(x - L-); it vanishes at u = u_max.
    const double k = 4.0 * beta * x * u_max;
    auto f = [beta, x, k](double u) {
        return 1.0 / (M_PI * std::sqrt(k - 4.0 * beta * x * u));
    };
    return integrate_sqrt_endpoints(f, 0.0, u_max, quad_tol, false, true);
}

} // namespace betaspec
