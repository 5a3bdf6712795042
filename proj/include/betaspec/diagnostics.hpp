#pragma once

#include "betaspec/ensembles.hpp"
#include "betaspec/laws.hpp"
#include "betaspec/rng.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace betaspec {

struct Histogram {
    std::vector<double> bin_edges; // k+1 sorted values
    std::vector<std::size_t> counts; // k bins; [edge_i, edge_{i+1}), last bin closed
    std::vector<double> density; // count / (total samples * bin width)
    std::size_t total_samples = 0;
};

struct ConvergenceReport {
    struct Row {
        std::size_t n;
        std::size_t trials;
        double ks_mean;
        double ks_std;
    };
    std::vector<Row> rows;
};

// One sampled ball: the weight vectors within radius r of a uniformly chosen
// root, with only the O(r) needed matrix entries ever drawn.
struct BallSample {
    std::size_t root = 0; // vertex index in the implicit n-vertex path
    std::size_t root_offset = 0; // index of the root within the ball vectors
    std::vector<double> loop_weights;
    std::vector<double> edge_weights;
};

// Two-sided Kolmogorov-Smirnov statistic of sorted samples against a
// reference CDF, using both empirical limits at each sample point.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& reference_cdf);
double ks_statistic(const std::vector<double>& sorted_samples, const ContinuousLaw& law);

Histogram histogram(const std::vector<double>& samples, const std::vector<double>& edges);

// For each size: sample `trials` matrices on per-trial substreams, compute
// eigenvalues, and report the mean and sample standard deviation of the KS
// statistic against the ensemble's limit law.
ConvergenceReport convergence_sweep(const EnsembleParams& params,
                                    const std::vector<std::size_t>& sizes,
                                    std::size_t trials, RngStream& stream);

// Ball-law diagnostics at scale: for each draw, choose a root uniformly in
// an implicit n-vertex ensemble path and sample just the entries within
// radius r of it. Requires r < n/2.
std::vector<BallSample> ball_statistics(const EnsembleParams& params, std::size_t n,
                                        std::size_t r, std::size_t draws,
                                        RngStream& stream);

// Edge weight at the root of a ball sample: the edge toward the higher
// neighbor when present, otherwise the lower one.
double root_edge_weight(const BallSample& b);
double root_loop_weight(const BallSample& b);

} // namespace betaspec
