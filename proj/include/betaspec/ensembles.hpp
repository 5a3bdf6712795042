#pragma once

#include "betaspec/rng.hpp"
#include "betaspec/tridiagonal.hpp"

namespace betaspec {

enum class EnsembleKind { Hermite, Laguerre };

struct EnsembleParams {
    EnsembleKind kind = EnsembleKind::Hermite;
    double beta = 1.0;
    double gamma = 1.0; // Laguerre only; requires gamma >= 1

    void validate() const;
};

// Limiting loop/edge weights of the bi-infinite path at root parameter u.
// Hermite: loop 0, edge sqrt(beta u).
// Laguerre: loop beta (gamma + 1 - 2u), edge beta sqrt(gamma - u) sqrt(1 - u).
struct LimitWeights {
    double loop_weight = 0.0;
    double edge_weight = 0.0;
    double u = 0.0;
};

// beta-Hermite tridiagonal model (1-based entry laws):
//   diag[j-1]    ~ N(0, 2) / sqrt(n)       for j = 1..n
//   offdiag[j-1] ~ chi_{beta j} / sqrt(n)  for j = 1..n-1
TridiagonalMatrix sample_hermite(std::size_t n, double beta, RngStream& stream);

// beta-Laguerre tridiagonal model with alpha = beta gamma (n-1) / 2
// (0-based entry laws):
//   diag[0] ~ chi^2_{2 alpha} / n
//   diag[j] ~ chi^2_{2 alpha + beta (n - 2j)} / n            for j = 1..n-1
//   offdiag[j-1] ~ chi_{2 alpha - beta (j-1)} chi_{beta (n-j)} / n  for j = 1..n-1
// Requires n >= 2 (n = 1 with gamma = 1 would need a 0-dof chi-square).
TridiagonalMatrix sample_laguerre(std::size_t n, double beta, double gamma, RngStream& stream);

TridiagonalMatrix sample(const EnsembleParams& params, std::size_t n, RngStream& stream);

LimitWeights limit_weights(const EnsembleParams& params, double u);

} // namespace betaspec
