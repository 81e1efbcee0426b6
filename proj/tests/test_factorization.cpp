#include <gtest/gtest.h>

#include <random>

#include "kgraph/fixtures.hpp"
#include "kgraph/kgraph.hpp"
#include "support/oracles.hpp"
#include "support/random_graph.hpp"

using namespace kgraph;

namespace {

KGraph build(std::string_view name) { return KGraph::build(fixture(name)); }

Path edge(const KGraph& g, std::string_view id) { return g.edge_path(g.skeleton().edge_index(id)); }

std::vector<std::string> ids(const KGraph& g, const Path& p) {
    std::vector<std::string> out;
    for (EdgeIndex e : p.edges()) out.push_back(g.skeleton().edge(e).id);
    return out;
}

using Ids = std::vector<std::string>;

// Every fixture and a deterministic batch of random graphs.
std::vector<KGraph> corpus() {
    auto out = test_support::fixture_graphs();
    for (auto& g : test_support::random_corpus(20261018, 12)) out.push_back(std::move(g));
    return out;
}

// A random composable edge sequence of the given length, colours uniform.
std::vector<EdgeIndex> random_walk(std::mt19937_64& rng, const KGraph& g, VertexIndex start, std::size_t len) {
    std::vector<EdgeIndex> out;
    VertexIndex at = start;
    for (std::size_t i = 0; i < len; ++i) {
        int c = std::uniform_int_distribution<int>(1, static_cast<int>(g.rank()))(rng);
        auto in = g.skeleton().edges_with_range(at, c);
        EdgeIndex e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
        out.push_back(e);
        at = g.skeleton().edge(e).source;
    }
    return out;
}

}  // namespace

TEST(Factorization, FixturesBuild) {
    for (const auto& name : fixture_names()) EXPECT_NO_THROW(build(name)) << name;
}

TEST(Factorization, ComposeSortsColours) {
    KGraph g = build("T2");
    Path p = g.compose(edge(g, "r"), edge(g, "b"));
    EXPECT_EQ(ids(g, p), (Ids{"b", "r"}));
    EXPECT_EQ(p.degree(), (Degree{1, 1}));
    EXPECT_EQ(p, g.compose(edge(g, "b"), edge(g, "r")));
}

TEST(Factorization, FlipFactor) {
    KGraph g = build("F");
    Path lambda = g.compose(edge(g, "b0"), edge(g, "r"));
    auto [mu, nu] = g.factor(lambda, {0, 1});
    EXPECT_EQ(ids(g, mu), (Ids{"r"}));
    EXPECT_EQ(ids(g, nu), (Ids{"b1"}));
    EXPECT_EQ(g.compose(mu, nu), lambda);

    // r b0 = b1 r
    EXPECT_EQ(ids(g, g.compose(edge(g, "r"), edge(g, "b0"))), (Ids{"b1", "r"}));
}

TEST(Factorization, FlipSegments) {
    KGraph g = build("F");
    Path lambda = g.compose(g.compose(edge(g, "b0"), edge(g, "b1")), edge(g, "r"));
    EXPECT_EQ(lambda.degree(), (Degree{2, 1}));
    EXPECT_EQ(ids(g, g.segment(lambda, {1, 0}, {2, 0})), (Ids{"b1"}));
    EXPECT_EQ(ids(g, g.segment(lambda, {0, 1}, {1, 1})), (Ids{"b1"}));  // b0 b1 r = b0 r b0 = r b1 b0
    EXPECT_EQ(ids(g, g.segment(lambda, {1, 1}, {2, 1})), (Ids{"b0"}));
    EXPECT_TRUE(g.segment(lambda, {1, 1}, {1, 1}).is_vertex());
}

TEST(Factorization, ErrorPaths) {
    KGraph g = build("D");
    EXPECT_THROW(g.compose(edge(g, "bu"), edge(g, "bw")), InputError);
    Path p = edge(g, "bu");
    EXPECT_THROW(g.factor(p, {0, 1}), DomainError);
    EXPECT_THROW(g.segment(p, {1, 0}, {0, 0}), DomainError);
    EXPECT_THROW(g.factor(p, {0, 0, 0}), InputError);
    EXPECT_THROW(g.swap(g.skeleton().edge_index("bu"), g.skeleton().edge_index("bw")), InputError);
}

TEST(Factorization, PathsFromCounts) {
    KGraph f = build("F");
    VertexIndex v = f.skeleton().vertex("v");
    EXPECT_EQ(f.paths_from(v, {2, 3}).size(), 4u);
    EXPECT_EQ(f.paths_from(v, {0, 0}).size(), 1u);

    KGraph d2 = build("D2");
    VertexIndex w = d2.skeleton().vertex("w");
    // colour-1 edges into w: bw from w, c from u
    EXPECT_EQ(d2.paths_from(w, {1, 0}).size(), 2u);
    // bw bw, bw c, c b0, c b1
    EXPECT_EQ(d2.paths_from(w, {2, 0}).size(), 4u);
    auto listed = d2.paths_from(w, {1, 1});
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
}

TEST(Factorization, InvalidSquaresRejected) {
    GraphInput in = fixture("F");
    in.squares.squares.pop_back();
    EXPECT_THROW(KGraph::build(in), ValidationError);
    Skeleton sk = Skeleton::build(in.skeleton);
    auto report = validate_squares(sk, in.squares);
    EXPECT_TRUE(report.has_kind("missing-pair"));

    GraphInput dup = fixture("F");
    dup.squares.squares[1].image = dup.squares.squares[0].image;
    auto report2 = validate_squares(Skeleton::build(dup.skeleton), dup.squares);
    EXPECT_TRUE(report2.has_kind("not-injective"));

    GraphInput bad = fixture("T2");
    bad.squares.squares[0].image = {"b", "r"};
    EXPECT_TRUE(validate_squares(Skeleton::build(bad.skeleton), bad.squares).has_kind("image-colors"));
}

namespace {

// One vertex, two edges of each of three colours. The 1/2 squares shift the
// colour-1 index by the colour-2 index and the 1/3 squares are trivial; the
// 2/3 squares either are trivial too or shift the colour-2 index by the
// colour-3 index. Working c_k b_j a_i through both schedules by hand gives
// a_{i+j} b_j c_k twice in the first case, and a_{i+j+k} versus a_{i+j} in
// the second.
GraphInput three_colour_cube(bool shift_23) {
    GraphInput g;
    g.skeleton = {3, {"v"}, {}};
    for (char c : {'a', 'b', 'c'}) {
        for (int i = 0; i < 2; ++i) {
            g.skeleton.edges.push_back({std::string(1, c) + std::to_string(i), c - 'a' + 1, "v", "v"});
        }
    }
    auto n = [](char c, int i) { return std::string(1, c) + std::to_string(i % 2); };
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            g.squares.squares.push_back({{n('a', i), n('b', j)}, {n('b', j), n('a', i + j)}});
            g.squares.squares.push_back({{n('a', i), n('c', j)}, {n('c', j), n('a', i)}});
            g.squares.squares.push_back({{n('b', i), n('c', j)}, {n('c', j), n('b', shift_23 ? i + j : i)}});
        }
    }
    return g;
}

}  // namespace

TEST(Factorization, CubeConditionHolds) {
    GraphInput g = three_colour_cube(false);
    EXPECT_TRUE(validate_cubes(Skeleton::build(g.skeleton), g.squares).ok());
    EXPECT_NO_THROW(KGraph::build(g));
}

TEST(Factorization, CubeViolationDetected) {
    GraphInput g = three_colour_cube(true);
    Skeleton sk = Skeleton::build(g.skeleton);
    EXPECT_TRUE(validate_squares(sk, g.squares).ok());
    auto report = validate_cubes(sk, g.squares);
    EXPECT_TRUE(report.has_kind("cube")) << report.to_string();
    EXPECT_THROW(KGraph::build(g), ValidationError);
}

TEST(Factorization, UniqueFactorizationBruteForce) {
    for (const KGraph& g : corpus()) {
        const Degree top = Degree::uniform(g.rank(), 2);
        for (VertexIndex v : g.vertices()) {
            for (const Path& lambda : g.paths_from(v, top)) {
                for (const Degree& m : degrees_below(top)) {
                    ASSERT_EQ(test_support::factorization_count(g, lambda, m), 1u) << g.name();
                }
            }
        }
    }
}

TEST(Factorization, SegmentCoherence) {
    for (const KGraph& g : corpus()) {
        const Degree top = Degree::uniform(g.rank(), 2);
        auto boxes = degrees_below(top);
        for (VertexIndex v : g.vertices()) {
            for (const Path& lambda : g.paths_from(v, top)) {
                for (const Degree& m : boxes) {
                    auto [mu, nu] = g.factor(lambda, m);
                    ASSERT_EQ(g.compose(mu, nu), lambda);
                    ASSERT_EQ(mu.degree(), m);
                    for (const Degree& n : boxes) {
                        if (!leq(m, n)) continue;
                        Path whole = g.compose(g.compose(g.segment(lambda, Degree(g.rank()), m),
                                                         g.segment(lambda, m, n)),
                                               g.segment(lambda, n, top));
                        ASSERT_EQ(whole, lambda);
                        ASSERT_EQ(g.segment(lambda, m, n), g.segment(nu, Degree(g.rank()), subtract(n, m)));
                    }
                }
            }
        }
    }
}

TEST(Factorization, CountingIdentity) {
    for (const KGraph& g : corpus()) {
        const Degree m = Degree::uniform(g.rank(), 1);
        Degree n = Degree::unit(g.rank(), 1);
        n = add(n, n);
        const Degree mn = add(m, n);
        for (VertexIndex v : g.vertices()) {
            std::size_t total = 0;
            for (const Path& mu : g.paths_from(v, m)) total += g.paths_from(mu.source(), n).size();
            EXPECT_EQ(g.paths_from(v, mn).size(), total) << g.name();
        }
    }
}

TEST(Factorization, PathCountsMatchMatrixProducts) {
    for (const KGraph& g : corpus()) {
        auto ms = vertex_matrices(g.skeleton());
        const Degree d = Degree::uniform(g.rank(), 1);
        CountMatrix prod = CountMatrix::identity(g.vertex_count());
        for (const auto& m : ms) prod = prod * m;
        for (VertexIndex v : g.vertices()) {
            std::vector<std::uint64_t> by_source(g.vertex_count(), 0);
            for (const Path& p : g.paths_from(v, d)) ++by_source[to_index(p.source())];
            for (VertexIndex w : g.vertices()) {
                EXPECT_EQ(by_source[to_index(w)], prod.at(to_index(v), to_index(w))) << g.name();
            }
            EXPECT_EQ(g.paths_into(v, d).size(), [&] {
                std::uint64_t col = 0;
                for (VertexIndex r : g.vertices()) col += prod.at(to_index(r), to_index(v));
                return col;
            }());
        }
    }
}

TEST(Factorization, NormalizationScheduleIndependent) {
    std::mt19937_64 rng(7);
    for (const KGraph& g : corpus()) {
        for (int trial = 0; trial < 40; ++trial) {
            VertexIndex v{static_cast<std::uint32_t>(
                std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng))};
            auto walk = random_walk(rng, g, v, 6);
            Path left = g.normalize(v, walk, SwapSchedule::left_to_right);
            Path right = g.normalize(v, walk, SwapSchedule::right_to_left);
            ASSERT_EQ(left, right) << g.name();
            // edge-by-edge composition must land on the same canonical path
            Path stepwise = g.vertex_path(v);
            for (EdgeIndex e : walk) stepwise = g.extend_by_edge(stepwise, e);
            ASSERT_EQ(stepwise, left);
        }
    }
}

TEST(Factorization, SwapIsInvolution) {
    for (const KGraph& g : corpus()) {
        for (const auto& sq : g.squares().squares) {
            const auto& sk = g.skeleton();
            auto [b, a] = g.swap(sk.edge_index(sq.pair[0]), sk.edge_index(sq.pair[1]));
            EXPECT_EQ(sk.edge(b).id, sq.image[0]);
            EXPECT_EQ(sk.edge(a).id, sq.image[1]);
            auto back = g.swap(b, a);
            EXPECT_EQ(sk.edge(back.first).id, sq.pair[0]);
            EXPECT_EQ(sk.edge(back.second).id, sq.pair[1]);
        }
    }
}

TEST(Factorization, RoundTripInput) {
    for (const KGraph& g : corpus()) {
        KGraph again = KGraph::build(g.to_input());
        EXPECT_EQ(again.to_input(), g.to_input());
    }
}
