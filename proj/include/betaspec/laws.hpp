#pragma once

#include "betaspec/ensembles.hpp"

#include <stdexcept>

namespace betaspec {

// Raised when a density is evaluated exactly at a singular support endpoint
// (where it diverges); integration routines substitute around such points.
struct EndpointError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class LawFamily { Semicircle, MarchenkoPastur, HermiteConditional, LaguerreConditional };

// Parametric limiting law with closed-form density and CDF.
//   Semicircle(beta):            sqrt(4 beta - x^2) / (2 pi beta)      on [-2 sqrt(beta), 2 sqrt(beta)]
//   MarchenkoPastur(beta,gamma): sqrt((x-L-)(L+-x)) / (2 pi beta x)    on [L-, L+], L+- = beta (1 +- sqrt(gamma))^2
//   HermiteConditional(u,beta):  1 / (pi sqrt(4 beta u - x^2))         on [-2 sqrt(beta u), 2 sqrt(beta u)], u in (0,1]
//   LaguerreConditional(u,b,g):  1 / (pi sqrt(4 c2^2 - (x-c1)^2))      on [c1-2 c2, c1+2 c2], u in [0,1),
//                                c1 = beta (gamma + 1 - 2u), c2 = beta sqrt(gamma-u) sqrt(1-u)
// The CDFs are the exact antiderivatives of these densities (the quad_tol
// parameter bounds nothing here; tests verify the forms against adaptive
// quadrature of the density).
class ContinuousLaw {
public:
    static ContinuousLaw semicircle(double beta);
    static ContinuousLaw marchenko_pastur(double beta, double gamma);
    static ContinuousLaw hermite_conditional(double u, double beta);
    static ContinuousLaw laguerre_conditional(double u, double beta, double gamma);

    LawFamily family() const { return family_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double u() const { return u_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

    // Pointwise density; 0 outside the support; throws EndpointError exactly
    // at a support endpoint where the density diverges.
    double density(double x) const;

    // P(X <= x), clamped to [0,1].
    double cdf(double x, double quad_tol = 1e-10) const;

    // Integral of x^k against the density, by adaptive quadrature with
    // endpoint substitution.
    double moment(unsigned k, double quad_tol) const;

    // Integral of the density over the support (1 up to quadrature error).
    double normalization(double quad_tol) const;

private:
    ContinuousLaw() = default;
    bool singular_at_lo() const;
    bool singular_at_hi() const;

    LawFamily family_ = LawFamily::Semicircle;
    double beta_ = 1.0;
    double gamma_ = 1.0;
    double u_ = 1.0;
    double lo_ = 0.0;
    double hi_ = 0.0;
};

// Fourier-mode eigenvalue of the bi-infinite limit path at root parameter u:
// Hermite 2 sqrt(beta u) cos(omega); Laguerre c1(u) + 2 c2(u) cos(omega).
double mode_eigenvalue(const EnsembleParams& params, double u, double omega);

// Largest u in [0,1] with x inside the support of LaguerreConditional(u):
// u_max(x) = (L+ - x)(x - L-) / (4 beta x), 0 outside (L-, L+).
// The identity 4 beta x - (L+ - x)(x - L-) = (x - beta (gamma - 1))^2 >= 0
// keeps the value in [0,1], with u_max = 1 only at x = beta (gamma - 1).
double laguerre_u_max(double x, double beta, double gamma);

// E_u[density of the conditional law at x] by adaptive quadrature: the
// integrand has an inverse-square-root singularity at one endpoint of the
// u-range (u = x^2/(4 beta) for Hermite, u = u_max(x) for Laguerre), removed
// by substitution. Agrees with the closed-form limit density.
double expected_density_numeric(const EnsembleParams& params, double x,
                                double quad_tol);

} // namespace betaspec
