#pragma once

#include "betaspec/measure.hpp"
#include "betaspec/tridiagonal.hpp"

#include <cstddef>
#include <vector>

namespace betaspec {

// All n eigenvalues, ascending, each within 1e-10 * max(1, ||T||_inf) of the
// exact value. Uses implicit-shift QL for small matrices and batched
// Sturm-count bisection above kEigenBisectThreshold.
std::vector<double> eigenvalues(const TridiagonalMatrix& T);

inline constexpr std::size_t kEigenBisectThreshold = 2048;

// The two routes behind eigenvalues(), exposed for cross-checking.
std::vector<double> eigenvalues_ql(const TridiagonalMatrix& T);
std::vector<double> eigenvalues_bisect(const TridiagonalMatrix& T);

// Number of eigenvalues of T strictly below x (Sturm count).
std::size_t sturm_count(const TridiagonalMatrix& T, double x);

// Spectral measure at a root: atoms (lambda_m, |e_m(root)|^2) over an
// orthonormal eigenbasis; masses sum to 1. Eigenvalues closer than
// 1e-12 * ||T||_inf are merged with their masses summed.
PointMeasure spectral_measure_at_root(const TridiagonalMatrix& T, std::size_t root);

// Expected spectral measure: atoms (lambda_m, 1/n), the root-average of the
// per-root measures.
PointMeasure expected_spectral_measure(const TridiagonalMatrix& T);

} // namespace betaspec
