#include "betaspec/diagnostics.hpp"

#include "betaspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betaspec {

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& reference_cdf) {
    const std::size_t m = sorted_samples.size();
    if (m == 0)
        throw std::invalid_argument("ks_statistic: empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0 && sorted_samples[i] < sorted_samples[i - 1])
            throw std::invalid_argument("ks_statistic: samples must be sorted");
        const double f = reference_cdf(sorted_samples[i]);
        const double below = f - static_cast<double>(i) / static_cast<double>(m);
        const double above = static_cast<double>(i + 1) / static_cast<double>(m) - f;
        d = std::max(d, std::max(below, above));
    }
    return d;
}

double ks_statistic(const std::vector<double>& sorted_samples, const ContinuousLaw& law) {
    return ks_statistic(sorted_samples, [&law](double x) { return law.cdf(x); });
}

Histogram histogram(const std::vector<double>& samples, const std::vector<double>& edges) {
    if (edges.size() < 2)
        throw std::invalid_argument("histogram: need at least 2 edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i] > edges[i - 1]))
            throw std::invalid_argument("histogram: edges must be strictly increasing");
    Histogram h;
    h.bin_edges = edges;
    h.total_samples = samples.size();
    const std::size_t k = edges.size() - 1;
    h.counts.assign(k, 0);
    for (double x : samples) {
        if (x < edges.front() || x > edges.back())
            continue;
        std::size_t idx = static_cast<std::size_t>(
            std::upper_bound(edges.begin(), edges.end(), x) - edges.begin());
        idx = idx == 0 ? 0 : idx - 1;
        if (idx >= k)
            idx = k - 1; // x == right edge belongs to the last bin
        ++h.counts[idx];
    }
    h.density.assign(k, 0.0);
    if (h.total_samples > 0)
        for (std::size_t i = 0; i < k; ++i)
            h.density[i] = static_cast<double>(h.counts[i]) /
                           (static_cast<double>(h.total_samples) * (edges[i + 1] - edges[i]));
    return h;
}

ConvergenceReport convergence_sweep(const EnsembleParams& params,
                                    const std::vector<std::size_t>& sizes,
                                    std::size_t trials, RngStream& stream) {
    params.validate();
    if (sizes.empty())
        throw std::invalid_argument("convergence_sweep: no sizes");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2)
            throw std::invalid_argument("convergence_sweep: sizes must be at least 2");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("convergence_sweep: sizes must be strictly increasing");
    }
    if (trials == 0)
        throw std::invalid_argument("convergence_sweep: trials must be positive");

    const ContinuousLaw limit = params.kind == EnsembleKind::Hermite
                                    ? ContinuousLaw::semicircle(params.beta)
                                    : ContinuousLaw::marchenko_pastur(params.beta, params.gamma);
    ConvergenceReport report;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double sum = 0.0, sum_sq = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            RngStream sub = stream.substream(i * trials + t);
            const TridiagonalMatrix T = sample(params, sizes[i], sub);
            const std::vector<double> lambda = eigenvalues(T);
            const double ks = ks_statistic(lambda, limit);
            sum += ks;
            sum_sq += ks * ks;
        }
        const double mean = sum / static_cast<double>(trials);
        double var = 0.0;
        if (trials > 1)
            var = std::max(0.0, (sum_sq - static_cast<double>(trials) * mean * mean) /
                                    static_cast<double>(trials - 1));
        report.rows.push_back({sizes[i], trials, mean, std::sqrt(var)});
    }
    return report;
}

namespace {

double hermite_loop_draw(RngStream& s, std::size_t n) {
    return s.normal(0.0, std::sqrt(2.0)) / std::sqrt(static_cast<double>(n));
}

double hermite_edge_draw(RngStream& s, std::size_t n, double beta, std::size_t i) {
    // 0-based off-diagonal index i has chi dof beta*(i+1)
    return s.chi(beta * static_cast<double>(i + 1)) / std::sqrt(static_cast<double>(n));
}

double laguerre_loop_draw(RngStream& s, std::size_t n, double beta, double gamma, std::size_t i) {
    const double nd = static_cast<double>(n);
    const double alpha = 0.5 * beta * gamma * (nd - 1.0);
    const double dof = i == 0 ? 2.0 * alpha
                              : 2.0 * alpha + beta * (nd - 2.0 * static_cast<double>(i));
    return s.chi_square(dof) / nd;
}

double laguerre_edge_draw(RngStream& s, std::size_t n, double beta, double gamma, std::size_t i) {
    const double nd = static_cast<double>(n);
    const double alpha = 0.5 * beta * gamma * (nd - 1.0);
    const double d1 = 2.0 * alpha - beta * static_cast<double>(i);
    const double d2 = beta * (nd - 1.0 - static_cast<double>(i));
    return s.chi(d1) * s.chi(d2) / nd;
}

} // namespace

std::vector<BallSample> ball_statistics(const EnsembleParams& params, std::size_t n,
                                        std::size_t r, std::size_t draws,
                                        RngStream& stream) {
    params.validate();
    if (n < 2)
        throw std::invalid_argument("ball_statistics: n must be at least 2");
    if (2 * r >= n)
        throw std::invalid_argument("ball_statistics: need r < n/2 (boundary balls dominate)");
    if (draws == 0)
        throw std::invalid_argument("ball_statistics: draws must be positive");

    std::vector<BallSample> out;
    out.reserve(draws);
    for (std::size_t d = 0; d < draws; ++d) {
        RngStream sub = stream.substream(d);
        const std::size_t root = sub.uniform_index(n);
        const std::size_t lo = root >= r ? root - r : 0;
        const std::size_t hi = std::min(n - 1, root + r);
        BallSample b;
        b.root = root;
        b.root_offset = root - lo;
        b.loop_weights.reserve(hi - lo + 1);
        for (std::size_t i = lo; i <= hi; ++i) {
            if (params.kind == EnsembleKind::Hermite)
                b.loop_weights.push_back(hermite_loop_draw(sub, n));
            else
                b.loop_weights.push_back(laguerre_loop_draw(sub, n, params.beta, params.gamma, i));
        }
        b.edge_weights.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
            if (params.kind == EnsembleKind::Hermite)
                b.edge_weights.push_back(hermite_edge_draw(sub, n, params.beta, i));
            else
                b.edge_weights.push_back(laguerre_edge_draw(sub, n, params.beta, params.gamma, i));
        }
        out.push_back(std::move(b));
    }
    return out;
}

double root_edge_weight(const BallSample& b) {
    if (b.edge_weights.empty())
        throw std::invalid_argument("root_edge_weight: ball has no edges (radius 0)");
    if (b.root_offset < b.edge_weights.size())
        return b.edge_weights[b.root_offset];
    return b.edge_weights[b.root_offset - 1];
}

double root_loop_weight(const BallSample& b) {
    return b.loop_weights[b.root_offset];
}

} // namespace betaspec
