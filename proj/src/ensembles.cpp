#include "betaspec/ensembles.hpp"

#include <cmath>
#include <stdexcept>

namespace betaspec {

void EnsembleParams::validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("EnsembleParams: beta must be positive");
    if (kind == EnsembleKind::Laguerre) {
        if (!std::isfinite(gamma))
            throw std::invalid_argument("EnsembleParams: gamma must be finite");
        if (gamma < 1.0)
            throw std::domain_error("EnsembleParams: gamma < 1 is an unsupported regime");
    }
}

TridiagonalMatrix sample_hermite(std::size_t n, double beta, RngStream& stream) {
    if (n == 0)
        throw std::invalid_argument("sample_hermite: n must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("sample_hermite: beta must be positive");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> diag(n), offdiag(n - 1);
    for (std::size_t j = 1; j <= n; ++j)
        diag[j - 1] = stream.normal(0.0, std::sqrt(2.0)) * inv_sqrt_n;
    for (std::size_t j = 1; j <= n - 1; ++j)
        offdiag[j - 1] = stream.chi(beta * static_cast<double>(j)) * inv_sqrt_n;
    return TridiagonalMatrix(std::move(diag), std::move(offdiag));
}

TridiagonalMatrix sample_laguerre(std::size_t n, double beta, double gamma, RngStream& stream) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("sample_laguerre: beta must be positive");
    if (!std::isfinite(gamma))
        throw std::invalid_argument("sample_laguerre: gamma must be finite");
    if (gamma < 1.0)
        throw std::domain_error("sample_laguerre: gamma < 1 is an unsupported regime");
    if (n < 2)
        throw std::invalid_argument("sample_laguerre: n must be at least 2 (n = 1 is degenerate)");
    const double nd = static_cast<double>(n);
    const double alpha = 0.5 * beta * gamma * (nd - 1.0);
    std::vector<double> diag(n), offdiag(n - 1);
    diag[0] = stream.chi_square(2.0 * alpha) / nd;
    for (std::size_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        diag[j] = stream.chi_square(2.0 * alpha + beta * (nd - 2.0 * jd)) / nd;
    }
    for (std::size_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double c1 = stream.chi(2.0 * alpha - beta * (jd - 1.0));
        const double c2 = stream.chi(beta * (nd - jd));
        offdiag[j - 1] = c1 * c2 / nd;
    }
    return TridiagonalMatrix(std::move(diag), std::move(offdiag));
}

TridiagonalMatrix sample(const EnsembleParams& params, std::size_t n, RngStream& stream) {
    params.validate();
    if (params.kind == EnsembleKind::Hermite)
        return sample_hermite(n, params.beta, stream);
    return sample_laguerre(n, params.beta, params.gamma, stream);
}

LimitWeights limit_weights(const EnsembleParams& params, double u) {
    params.validate();
    if (!(u >= 0.0 && u <= 1.0))
        throw std::invalid_argument("limit_weights: u must lie in [0,1]");
    LimitWeights w;
    w.u = u;
    if (params.kind == EnsembleKind::Hermite) {
        w.loop_weight = 0.0;
        w.edge_weight = std::sqrt(params.beta * u);
    } else {
        w.loop_weight = params.beta * (params.gamma + 1.0 - 2.0 * u);
        w.edge_weight = params.beta * std::sqrt(params.gamma - u) * std::sqrt(1.0 - u);
    }
    return w;
}

} // namespace betaspec
