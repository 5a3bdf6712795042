#pragma once

#include <functional>

namespace betaspec {

// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b] with an absolute
// error target. Throws std::runtime_error when the target cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

// Same, but tolerant of inverse-square-root singularities (or square-root
// kinks) at the flagged endpoints: the affected half is integrated after the
// substitution x = a + t^2 (resp. x = b - t^2), which maps the singular
// factor onto a smooth integrand. Endpoints themselves are never evaluated.
double integrate_sqrt_endpoints(const std::function<double(double)>& f,
                                double a, double b, double abs_tol,
                                bool substitute_at_a, bool substitute_at_b);

} // namespace betaspec
