#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace betaspec {

// Symmetric tridiagonal matrix: diag holds the n diagonal entries (loop
// weights), offdiag the n-1 off-diagonal entries (edge weights), each of
// which appears on both sides of the diagonal.
struct TridiagonalMatrix {
    std::size_t n = 0;
    std::vector<double> diag;
    std::vector<double> offdiag;

    TridiagonalMatrix() = default;
    TridiagonalMatrix(std::vector<double> d, std::vector<double> e)
        : n(d.size()), diag(std::move(d)), offdiag(std::move(e)) {
        validate();
    }

    void validate() const {
        if (n == 0 || diag.size() != n || offdiag.size() + 1 != n)
            throw std::invalid_argument("TridiagonalMatrix: need n >= 1, n diagonal and n-1 off-diagonal entries");
        for (double v : diag)
            if (!std::isfinite(v))
                throw std::invalid_argument("TridiagonalMatrix: non-finite diagonal entry");
        for (double v : offdiag)
            if (!std::isfinite(v))
                throw std::invalid_argument("TridiagonalMatrix: non-finite off-diagonal entry");
    }

    // Max row sum of absolute values.
    double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = std::fabs(diag[i]);
            if (i > 0)
                row += std::fabs(offdiag[i - 1]);
            if (i + 1 < n)
                row += std::fabs(offdiag[i]);
            if (row > best)
                best = row;
        }
        return best;
    }

    // y = T x
    std::vector<double> multiply(const std::vector<double>& x) const {
        if (x.size() != n)
            throw std::invalid_argument("multiply: size mismatch");
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double v = diag[i] * x[i];
            if (i > 0)
                v += offdiag[i - 1] * x[i - 1];
            if (i + 1 < n)
                v += offdiag[i] * x[i + 1];
            y[i] = v;
        }
        return y;
    }
};

} // namespace betaspec
