#pragma once

#include "betaspec/ensembles.hpp"
#include "betaspec/rng.hpp"
#include "betaspec/tridiagonal.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace betaspec {

enum class GraphKind { FinitePath, BiInfinitePath };

// Weighted rooted path graph. Finite paths carry per-vertex loop weights and
// per-edge weights; bi-infinite paths have constant weights (the
// Benjamini-Schramm limits) and their root fixed at vertex 0. Vertices are
// indexed by integers (all of Z for the bi-infinite case).
struct WeightedRootedGraph {
    GraphKind kind = GraphKind::FinitePath;

    // FinitePath payload.
    std::vector<double> loop_weights;
    std::vector<double> edge_weights;
    std::int64_t root = -1; // -1 = unassigned

    // BiInfinitePath payload.
    LimitWeights limit;

    int degree_bound = 3; // two path neighbors plus the loop
    double weight_bound = 0.0;

    bool rooted() const { return kind == GraphKind::BiInfinitePath || root >= 0; }
    std::size_t size() const { return loop_weights.size(); }
};

// Ball of radius r around the root: a finite path segment with the root
// marked by its offset into the vertex list.
struct RootedBall {
    std::size_t radius = 0;
    std::vector<double> loop_weights;
    std::vector<double> edge_weights;
    std::size_t root_offset = 0;
};

// Path graph carrying T's diagonal as loop weights and off-diagonal as edge
// weights; root defaults to vertex 0.
WeightedRootedGraph graph_from_tridiagonal(const TridiagonalMatrix& T);

WeightedRootedGraph bi_infinite_path(const LimitWeights& weights);

// Copy of G with the root drawn uniformly from its vertices.
WeightedRootedGraph choose_root_uniform(const WeightedRootedGraph& G, RngStream& stream);

RootedBall ball(const WeightedRootedGraph& G, std::size_t r);

// Root-preserving isomorphism matching every loop and edge weight within
// absolute tolerance tol. For path graphs the only candidate maps are the
// identity and the reflection through the root.
bool rooted_isomorphic(const RootedBall& b1, const RootedBall& b2, double tol);

// Benjamini-Schramm metric 2^(-k) with k the largest radius <= r_max whose
// balls are isomorphic; 0 if isomorphic through r_max, 2 if even the radius-0
// balls differ.
double graph_distance(const WeightedRootedGraph& g1, const WeightedRootedGraph& g2,
                      std::size_t r_max, double tol);

// Adjacency action [Af](v) = loop(v) f(v) + sum over neighbors u of
// edge(v,u) f(u), for a finitely supported f given as vertex -> value.
double apply_adjacency(const WeightedRootedGraph& G,
                       const std::unordered_map<std::int64_t, double>& f,
                       std::int64_t v);

} // namespace betaspec
