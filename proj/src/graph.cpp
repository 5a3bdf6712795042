#include "betaspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betaspec {

WeightedRootedGraph graph_from_tridiagonal(const TridiagonalMatrix& T) {
    T.validate();
    WeightedRootedGraph g;
    g.kind = GraphKind::FinitePath;
    g.loop_weights = T.diag;
    g.edge_weights = T.offdiag;
    g.root = 0;
    double m = 0.0;
    for (double v : T.diag)
        m = std::max(m, std::fabs(v));
    for (double v : T.offdiag)
        m = std::max(m, std::fabs(v));
    g.weight_bound = m;
    return g;
}

WeightedRootedGraph bi_infinite_path(const LimitWeights& weights) {
    WeightedRootedGraph g;
    g.kind = GraphKind::BiInfinitePath;
    g.limit = weights;
    g.root = 0;
    g.weight_bound = std::max(std::fabs(weights.loop_weight), std::fabs(weights.edge_weight));
    return g;
}

WeightedRootedGraph choose_root_uniform(const WeightedRootedGraph& G, RngStream& stream) {
    if (G.kind == GraphKind::BiInfinitePath)
        throw std::invalid_argument("choose_root_uniform: bi-infinite paths have a fixed root");
    if (G.size() == 0)
        throw std::invalid_argument("choose_root_uniform: empty graph");
    WeightedRootedGraph out = G;
    out.root = static_cast<std::int64_t>(stream.uniform_index(G.size()));
    return out;
}

RootedBall ball(const WeightedRootedGraph& G, std::size_t r) {
    if (!G.rooted())
        throw std::invalid_argument("ball: graph has no root");
    RootedBall b;
    b.radius = r;
    if (G.kind == GraphKind::BiInfinitePath) {
        const std::size_t nv = 2 * r + 1;
        b.loop_weights.assign(nv, G.limit.loop_weight);
        b.edge_weights.assign(nv - 1, G.limit.edge_weight);
        b.root_offset = r;
        return b;
    }
    const std::int64_t n = static_cast<std::int64_t>(G.size());
    const std::int64_t lo = std::max<std::int64_t>(0, G.root - static_cast<std::int64_t>(r));
    const std::int64_t hi = std::min<std::int64_t>(n - 1, G.root + static_cast<std::int64_t>(r));
    b.loop_weights.assign(G.loop_weights.begin() + lo, G.loop_weights.begin() + hi + 1);
    if (hi > lo)
        b.edge_weights.assign(G.edge_weights.begin() + lo, G.edge_weights.begin() + hi);
    b.root_offset = static_cast<std::size_t>(G.root - lo);
    return b;
}

namespace {

bool weights_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(std::fabs(a[i] - b[i]) <= tol))
            return false;
    return true;
}

RootedBall reflected(const RootedBall& b) {
    RootedBall out;
    out.radius = b.radius;
    out.loop_weights.assign(b.loop_weights.rbegin(), b.loop_weights.rend());
    out.edge_weights.assign(b.edge_weights.rbegin(), b.edge_weights.rend());
    out.root_offset = b.loop_weights.size() - 1 - b.root_offset;
    return out;
}

bool direct_match(const RootedBall& a, const RootedBall& b, double tol) {
    return a.root_offset == b.root_offset &&
           weights_match(a.loop_weights, b.loop_weights, tol) &&
           weights_match(a.edge_weights, b.edge_weights, tol);
}

} // namespace

bool rooted_isomorphic(const RootedBall& b1, const RootedBall& b2, double tol) {
    if (b1.radius != b2.radius)
        throw std::invalid_argument("rooted_isomorphic: radius mismatch");
    if (!(tol >= 0.0))
        throw std::invalid_argument("rooted_isomorphic: tol must be nonnegative");
    if (b1.loop_weights.size() != b2.loop_weights.size())
        return false;
    return direct_match(b1, b2, tol) || direct_match(b1, reflected(b2), tol);
}

double graph_distance(const WeightedRootedGraph& g1, const WeightedRootedGraph& g2,
                      std::size_t r_max, double tol) {
    if (!g1.rooted() || !g2.rooted())
        throw std::invalid_argument("graph_distance: both graphs must be rooted");
    if (r_max == 0)
        throw std::invalid_argument("graph_distance: r_max must be positive");
    for (std::size_t r = 0; r <= r_max; ++r) {
        if (!rooted_isomorphic(ball(g1, r), ball(g2, r), tol)) {
            if (r == 0)
                return 2.0; // no isomorphic ball at any radius
            return std::ldexp(1.0, -static_cast<int>(r - 1));
        }
    }
    return 0.0; // isomorphic through r_max; true distance <= 2^(-r_max)
}

double apply_adjacency(const WeightedRootedGraph& G,
                       const std::unordered_map<std::int64_t, double>& f,
                       std::int64_t v) {
    auto value = [&f](std::int64_t idx) {
        auto it = f.find(idx);
        return it == f.end() ? 0.0 : it->second;
    };
    if (G.kind == GraphKind::BiInfinitePath) {
        return G.limit.loop_weight * value(v) +
               G.limit.edge_weight * (value(v - 1) + value(v + 1));
    }
    const std::int64_t n = static_cast<std::int64_t>(G.size());
    if (v < 0 || v >= n)
        throw std::invalid_argument("apply_adjacency: vertex out of range");
    double out = G.loop_weights[static_cast<std::size_t>(v)] * value(v);
    if (v > 0)
        out += G.edge_weights[static_cast<std::size_t>(v - 1)] * value(v - 1);
    if (v + 1 < n)
        out += G.edge_weights[static_cast<std::size_t>(v)] * value(v + 1);
    return out;
}

} // namespace betaspec
