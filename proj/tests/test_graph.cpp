#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betaspec/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace betaspec;

namespace {

WeightedRootedGraph constant_path(std::size_t n, double loop, double edge, std::int64_t root) {
    TridiagonalMatrix T(std::vector<double>(n, loop), std::vector<double>(n - 1, edge));
    WeightedRootedGraph g = graph_from_tridiagonal(T);
    g.root = root;
    return g;
}

} // namespace

TEST_CASE("graph_from_tridiagonal copies weights and roots at vertex 0") {
    TridiagonalMatrix T({1.0, -2.0, 0.5}, {0.3, 4.0});
    const WeightedRootedGraph g = graph_from_tridiagonal(T);
    CHECK(g.kind == GraphKind::FinitePath);
    CHECK(g.loop_weights == T.diag);
    CHECK(g.edge_weights == T.offdiag);
    CHECK(g.root == 0);
    CHECK(g.rooted());
    CHECK(g.size() == 3);
    CHECK(g.degree_bound == 3);
    CHECK(g.weight_bound == doctest::Approx(4.0));
}

TEST_CASE("bi_infinite_path stores the limit weights with a fixed root") {
    LimitWeights w;
    w.loop_weight = -1.5;
    w.edge_weight = 2.0;
    w.u = 0.3;
    const WeightedRootedGraph g = bi_infinite_path(w);
    CHECK(g.kind == GraphKind::BiInfinitePath);
    CHECK(g.rooted());
    CHECK(g.limit.loop_weight == -1.5);
    CHECK(g.limit.edge_weight == 2.0);
    CHECK(g.weight_bound == doctest::Approx(2.0));
}

TEST_CASE("choose_root_uniform covers all vertices and is reproducible") {
    const WeightedRootedGraph g = constant_path(5, 0.0, 1.0, 0);
    RngStream s1(12), s2(12);
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 2000; ++i) {
        const WeightedRootedGraph a = choose_root_uniform(g, s1);
        const WeightedRootedGraph b = choose_root_uniform(g, s2);
        REQUIRE(a.root >= 0);
        REQUIRE(a.root < 5);
        CHECK(a.root == b.root);
        ++seen[static_cast<std::size_t>(a.root)];
    }
    for (int c : seen)
        CHECK(c > 300);

    LimitWeights w;
    const WeightedRootedGraph inf = bi_infinite_path(w);
    RngStream s3(1);
    CHECK_THROWS_AS(choose_root_uniform(inf, s3), std::invalid_argument);
}

TEST_CASE("balls slice the path and clip at the boundary") {
    TridiagonalMatrix T({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0},
                        {10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0, 18.0});
    WeightedRootedGraph g = graph_from_tridiagonal(T);

    g.root = 5;
    const RootedBall mid = ball(g, 2);
    CHECK(mid.radius == 2);
    CHECK(mid.loop_weights == std::vector<double>{3.0, 4.0, 5.0, 6.0, 7.0});
    CHECK(mid.edge_weights == std::vector<double>{13.0, 14.0, 15.0, 16.0});
    CHECK(mid.root_offset == 2);

    g.root = 1;
    const RootedBall left = ball(g, 3);
    CHECK(left.loop_weights == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0});
    CHECK(left.edge_weights == std::vector<double>{10.0, 11.0, 12.0, 13.0});
    CHECK(left.root_offset == 1);

    g.root = 9;
    const RootedBall right = ball(g, 2);
    CHECK(right.loop_weights == std::vector<double>{7.0, 8.0, 9.0});
    CHECK(right.edge_weights == std::vector<double>{17.0, 18.0});
    CHECK(right.root_offset == 2);

    g.root = 4;
    const RootedBall zero = ball(g, 0);
    CHECK(zero.loop_weights == std::vector<double>{4.0});
    CHECK(zero.edge_weights.empty());
    CHECK(zero.root_offset == 0);

    const RootedBall all = ball(g, 100);
    CHECK(all.loop_weights.size() == 10);
    CHECK(all.edge_weights.size() == 9);

    WeightedRootedGraph unrooted = g;
    unrooted.root = -1;
    CHECK_THROWS_AS(ball(unrooted, 1), std::invalid_argument);
}

TEST_CASE("balls of the bi-infinite path are constant windows") {
    LimitWeights w;
    w.loop_weight = 0.25;
    w.edge_weight = 1.75;
    const WeightedRootedGraph g = bi_infinite_path(w);
    const RootedBall b = ball(g, 3);
    CHECK(b.loop_weights == std::vector<double>(7, 0.25));
    CHECK(b.edge_weights == std::vector<double>(6, 1.75));
    CHECK(b.root_offset == 3);
}

TEST_CASE("rooted isomorphism accepts identity and reflection, within tol") {
    TridiagonalMatrix T({1.0, 2.0, 3.0}, {5.0, 6.0});
    WeightedRootedGraph g = graph_from_tridiagonal(T);
    g.root = 1;
    const RootedBall b = ball(g, 1);
    CHECK(rooted_isomorphic(b, b, 0.0));

    // The mirror image about the root is the same rooted graph.
    TridiagonalMatrix Tm({3.0, 2.0, 1.0}, {6.0, 5.0});
    WeightedRootedGraph gm = graph_from_tridiagonal(Tm);
    gm.root = 1;
    CHECK(rooted_isomorphic(b, ball(gm, 1), 0.0));

    // An asymmetric relabeling that is neither identity nor reflection fails.
    TridiagonalMatrix Tx({2.0, 1.0, 3.0}, {5.0, 6.0});
    WeightedRootedGraph gx = graph_from_tridiagonal(Tx);
    gx.root = 1;
    CHECK_FALSE(rooted_isomorphic(b, ball(gx, 1), 0.0));

    // Tolerance semantics are absolute per weight.
    TridiagonalMatrix Tp({1.0, 2.0 + 1e-9, 3.0}, {5.0, 6.0});
    WeightedRootedGraph gp = graph_from_tridiagonal(Tp);
    gp.root = 1;
    CHECK(rooted_isomorphic(b, ball(gp, 1), 1e-8));
    CHECK_FALSE(rooted_isomorphic(b, ball(gp, 1), 1e-10));

    CHECK_THROWS_AS(rooted_isomorphic(b, ball(g, 2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rooted_isomorphic(b, b, -1.0), std::invalid_argument);

    // Same vertex count, different root position: only isomorphic if the
    // reflection lines up.
    WeightedRootedGraph ga = constant_path(4, 1.0, 1.0, 0);
    WeightedRootedGraph gb = constant_path(4, 1.0, 1.0, 1);
    const RootedBall ba = ball(ga, 5);
    const RootedBall bb = ball(gb, 5);
    CHECK_FALSE(rooted_isomorphic(ba, bb, 0.0));
    WeightedRootedGraph gc = constant_path(4, 1.0, 1.0, 3);
    CHECK(rooted_isomorphic(ba, ball(gc, 5), 0.0));
}

TEST_CASE("graph_distance is 2^-(r-1) at the first differing radius") {
    const std::size_t n = 9;
    const WeightedRootedGraph a = constant_path(n, 1.0, 0.5, 4);

    // Identical graphs: distance 0 through any horizon.
    CHECK(graph_distance(a, a, 6, 0.0) == 0.0);

    // First difference at hop 3 from the root: distance 2^-2 = 0.25.
    WeightedRootedGraph b = a;
    b.loop_weights[7] = 9.0;
    CHECK(graph_distance(a, b, 6, 0.0) == doctest::Approx(0.25));
    CHECK(graph_distance(b, a, 6, 0.0) == doctest::Approx(0.25));

    // An edge first visible at radius 3 gives the same distance.
    WeightedRootedGraph be = a;
    be.edge_weights[6] = -2.0;
    CHECK(graph_distance(a, be, 6, 0.0) == doctest::Approx(0.25));

    // Difference at hop 1: distance 2^0 = 1.
    WeightedRootedGraph c = a;
    c.loop_weights[5] = 7.0;
    CHECK(graph_distance(a, c, 6, 0.0) == doctest::Approx(1.0));

    // Different root loops: even the radius-0 balls differ.
    WeightedRootedGraph d = a;
    d.loop_weights[4] = 3.0;
    CHECK(graph_distance(a, d, 6, 0.0) == doctest::Approx(2.0));

    // Horizon shorter than the first difference: indistinguishable, 0.
    CHECK(graph_distance(a, b, 2, 0.0) == 0.0);

    // Tolerance absorbs differences.
    WeightedRootedGraph e = a;
    e.loop_weights[6] += 1e-12;
    CHECK(graph_distance(a, e, 6, 1e-9) == 0.0);
    CHECK(graph_distance(a, e, 6, 0.0) == doctest::Approx(0.5));

    CHECK_THROWS_AS(graph_distance(a, b, 0, 0.0), std::invalid_argument);
}

TEST_CASE("graph_distance sees boundary clipping as a structural difference") {
    const WeightedRootedGraph a = constant_path(9, 0.0, 1.0, 4);
    const WeightedRootedGraph b = constant_path(9, 0.0, 1.0, 3);
    // Balls agree through radius 3; at radius 4 the root-3 ball clips.
    CHECK(graph_distance(a, b, 8, 0.0) == doctest::Approx(0.125));
}

TEST_CASE("finite balls converge to the bi-infinite limit ball") {
    LimitWeights w;
    w.loop_weight = 0.0;
    w.edge_weight = 1.0;
    const WeightedRootedGraph inf = bi_infinite_path(w);
    const WeightedRootedGraph fin = constant_path(101, 0.0, 1.0, 50);
    CHECK(graph_distance(inf, fin, 10, 0.0) == 0.0);

    // A root near the boundary is distinguished once the ball clips.
    const WeightedRootedGraph near_edge = constant_path(101, 0.0, 1.0, 2);
    CHECK(graph_distance(inf, near_edge, 10, 0.0) == doctest::Approx(0.25));
}

TEST_CASE("graph_distance satisfies symmetry and the ultrametric inequality") {
    std::vector<WeightedRootedGraph> gs;
    gs.push_back(constant_path(9, 1.0, 0.5, 4));
    for (std::size_t i = 0; i < 4; ++i) {
        WeightedRootedGraph g = gs[0];
        g.loop_weights[4 + i] += 1.0;
        gs.push_back(g);
    }
    for (const auto& x : gs)
        for (const auto& y : gs)
            for (const auto& z : gs) {
                const double dxy = graph_distance(x, y, 6, 0.0);
                CHECK(dxy == graph_distance(y, x, 6, 0.0));
                const double dxz = graph_distance(x, z, 6, 0.0);
                const double dyz = graph_distance(y, z, 6, 0.0);
                CHECK(dxz <= std::max(dxy, dyz) + 1e-15);
            }
}

TEST_CASE("apply_adjacency reproduces the tridiagonal action") {
    TridiagonalMatrix T({1.0, -2.0, 0.5, 3.0}, {0.3, 4.0, -1.0});
    const WeightedRootedGraph g = graph_from_tridiagonal(T);

    // f = e_j: [Af](v) = T[v][j], recovered column by column.
    for (std::int64_t j = 0; j < 4; ++j) {
        std::unordered_map<std::int64_t, double> f{{j, 1.0}};
        std::vector<double> unit(4, 0.0);
        unit[static_cast<std::size_t>(j)] = 1.0;
        const std::vector<double> col = T.multiply(unit);
        for (std::int64_t v = 0; v < 4; ++v)
            CHECK(apply_adjacency(g, f, v) ==
                  doctest::Approx(col[static_cast<std::size_t>(v)]).epsilon(1e-15));
    }

    // General finitely supported f.
    std::unordered_map<std::int64_t, double> f{{0, 2.0}, {1, -1.0}, {3, 0.5}};
    const std::vector<double> fv{2.0, -1.0, 0.0, 0.5};
    const std::vector<double> want = T.multiply(fv);
    for (std::int64_t v = 0; v < 4; ++v)
        CHECK(apply_adjacency(g, f, v) ==
              doctest::Approx(want[static_cast<std::size_t>(v)]).epsilon(1e-15));

    CHECK_THROWS_AS(apply_adjacency(g, f, -1), std::invalid_argument);
    CHECK_THROWS_AS(apply_adjacency(g, f, 4), std::invalid_argument);
}

TEST_CASE("apply_adjacency on the bi-infinite path spreads one step") {
    LimitWeights w;
    w.loop_weight = -0.5;
    w.edge_weight = 2.0;
    const WeightedRootedGraph g = bi_infinite_path(w);
    const std::unordered_map<std::int64_t, double> f{{0, 1.0}};
    CHECK(apply_adjacency(g, f, 0) == doctest::Approx(-0.5));
    CHECK(apply_adjacency(g, f, 1) == doctest::Approx(2.0));
    CHECK(apply_adjacency(g, f, -1) == doctest::Approx(2.0));
    CHECK(apply_adjacency(g, f, 2) == 0.0);
    CHECK(apply_adjacency(g, f, -7) == 0.0);
}
