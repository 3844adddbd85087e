#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "mvlab/covering.hpp"
#include "mvlab/errors.hpp"
#include "mvlab/hypergraph.hpp"
#include "mvlab/vertex_set.hpp"

using namespace mvlab;

namespace {

std::vector<std::uint64_t> edges_of(const Hypergraph& h) { return {h.edges().begin(), h.edges().end()}; }

// smallest family of blocks covering all t-sets, by trying every family of m blocks
int brute_covering(int n, int k, int t) {
    auto blocks = brute::sets_of_size(n, k);
    auto tsets = brute::sets_of_size(n, t);
    int b = static_cast<int>(blocks.size());
    for (int m = 1; m <= b; ++m) {
        bool ok = false;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << b) && !ok; ++pick) {
            if (std::popcount(pick) != m) continue;
            ok = std::all_of(tsets.begin(), tsets.end(), [&](std::uint64_t s) {
                for (int i = 0; i < b; ++i)
                    if (((pick >> i) & 1) && (s & blocks[i]) == s) return true;
                return false;
            });
        }
        if (ok) return m;
    }
    return -1;
}

} // namespace

TEST(Transversal, Examples) {
    Hypergraph triangle(3, 2, std::vector<std::uint64_t>{0b011, 0b101, 0b110});
    EXPECT_EQ(transversal_number(triangle).tau, 2);
    Hypergraph matching(8, 2, std::vector<std::uint64_t>{0b11, 0b1100, 0b110000, 0b11000000});
    EXPECT_EQ(transversal_number(matching).tau, 4);
    EXPECT_EQ(transversal_number(Hypergraph(5, 2)).tau, 0);
}

TEST(Transversal, MatchesExhaustiveSearchOnRandomHypergraphs) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        int k = 1 + static_cast<int>(rng() % 3);
        if (k > n) continue;
        auto all = brute::sets_of_size(n, k);
        std::vector<std::uint64_t> edges;
        for (auto e : all)
            if (rng() % 3 == 0) edges.push_back(e);
        Hypergraph h(n, k, edges);
        auto cert = transversal_number(h);
        int expect = brute::transversal_number(n, edges);
        ASSERT_TRUE(cert.optimal);
        EXPECT_EQ(cert.tau, expect);
        EXPECT_EQ(cert.transversal.size(), cert.tau);
        EXPECT_TRUE(is_transversal(h, cert.transversal.bits()));
        for (int s = 0; s <= n + 1; ++s) EXPECT_EQ(transversal_at_least(h, s), expect >= s);
    }
}

TEST(UnderlyingHypergraph, Examples) {
    auto g = FamilyGraph::kneser(5, 2);
    auto all = underlying_hypergraph(VertexSet(g).complement());
    EXPECT_EQ(all.edge_count(), 10u);
    EXPECT_EQ(transversal_number(underlying_hypergraph(VertexSet(g))).tau, 0);
}

TEST(Constructions, GeneralizedTriangle) {
    auto t2 = build_generalized_triangle(2);
    EXPECT_EQ(t2.n(), 3);
    EXPECT_EQ(t2.edge_count(), 3u);
    auto t3 = build_generalized_triangle(3);
    EXPECT_EQ(t3.n(), 5);
    EXPECT_EQ(t3.edge_count(), 3u);
    auto t4 = build_generalized_triangle(4);
    EXPECT_EQ(t4.n(), 6);
    for (int k = 2; k <= 6; ++k) {
        auto h = build_generalized_triangle(k);
        EXPECT_EQ(h.k(), k);
        EXPECT_EQ(brute::transversal_number(h.n(), edges_of(h)), 2) << k;
    }
    EXPECT_THROW(build_generalized_triangle(1), ConstraintError);
}

TEST(Constructions, CompleteUniform) {
    EXPECT_EQ(build_complete_uniform(3, 3).edge_count(), 1u);
    EXPECT_EQ(transversal_number(build_complete_uniform(3, 2)).tau, 2);
    auto h = build_complete_uniform(5, 4);
    EXPECT_EQ(h.edge_count(), 5u);
    EXPECT_EQ(brute::transversal_number(5, edges_of(h)), 2);
    EXPECT_THROW(build_complete_uniform(2, 3), ConstraintError);
}

TEST(Constructions, HnkHasTransversalNumber2k) {
    auto h16 = build_H_nk(16, 3);
    EXPECT_EQ(h16.edge_count(), 8u);
    EXPECT_EQ(brute::transversal_number(16, edges_of(h16)), 6);
    auto h17 = build_H_nk(17, 3);
    EXPECT_EQ(h17.n(), 17);
    EXPECT_EQ(edges_of(h17), edges_of(h16));
    auto h23 = build_H_nk(23, 4);
    EXPECT_EQ(h23.edge_count(), 16u);
    EXPECT_EQ(transversal_number(h23).tau, 8);
    EXPECT_THROW(build_H_nk(15, 3), ConstraintError);
}

TEST(Covering, SteinerBound) {
    EXPECT_EQ(steiner_lower_bound(7, 5, 3), 4);
    EXPECT_EQ(steiner_lower_bound(8, 6, 3), 3);
    EXPECT_EQ(steiner_lower_bound(5, 5, 2), 1);
}

TEST(Covering, Examples) {
    EXPECT_EQ(covering_number(7, 5, 3).value, Interval::exact(5));
    EXPECT_EQ(covering_number(8, 6, 3).value, Interval::exact(4));
    EXPECT_EQ(covering_number(7, 5, 4).value, Interval::exact(9));
    for (int t = 1; t <= 6; ++t) EXPECT_EQ(covering_number(6, 6, t).value, Interval::exact(1));
}

TEST(Covering, BothSidesAgreeWithExhaustiveSearch) {
    for (auto [n, k, t] : {std::tuple{5, 3, 2}, {6, 4, 2}, {6, 3, 2}, {6, 4, 3}, {7, 5, 3}, {7, 5, 2}}) {
        auto blocks = covering_number_blocks(n, k, t);
        auto dual = covering_number_transversal(n, k, t);
        int expect = brute_covering(n, k, t);
        EXPECT_EQ(blocks.value, Interval::exact(expect)) << n << k << t;
        EXPECT_EQ(dual.value, Interval::exact(expect)) << n << k << t;
        EXPECT_TRUE(covers_all(n, t, blocks.blocks));
        EXPECT_TRUE(covers_all(n, t, dual.blocks));
        EXPECT_EQ(dual.side, CoveringSide::transversal);
    }
}

TEST(Covering, DualityAtTheCStarInstances) {
    // C(n, n-k, t) is the least edge count of a k-graph with tau >= t+1
    for (int n : {6, 7, 8}) {
        auto blocks = covering_number_blocks(n, n - 2, 3);
        auto edges = min_edges_with_transversal(n, 2, 4);
        ASSERT_TRUE(blocks.exact());
        EXPECT_EQ(blocks.value, edges.value) << n;
        EXPECT_TRUE(transversal_at_least(edges.witness, 4));
        EXPECT_EQ(static_cast<std::int64_t>(edges.witness.edge_count()), edges.value.hi);
    }
}

TEST(Covering, ConstraintsAreNamed) {
    EXPECT_THROW(covering_number(5, 6, 2), ConstraintError);
    EXPECT_THROW(c_star(5, 2), ConstraintError);
    EXPECT_THROW(min_edges_with_transversal(4, 2, 5), ConstraintError);
}

TEST(CStar, SmallValues) {
    EXPECT_EQ(c_star(6, 2).value, Interval::exact(6));
    EXPECT_EQ(c_star(7, 2).value, Interval::exact(5));
    for (int n = 8; n <= 12; ++n) EXPECT_EQ(c_star(n, 2).value, Interval::exact(4)) << n;
}

TEST(CStar, SixMatchesExhaustiveSearchOverAllGraphs) {
    // all 2^15 graphs on [6]
    auto all = brute::sets_of_size(6, 2);
    int best = 100;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << all.size()); ++pick) {
        if (std::popcount(pick) >= best) continue;
        std::vector<std::uint64_t> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((pick >> i) & 1) edges.push_back(all[i]);
        if (brute::transversal_number(6, edges) >= 4) best = std::popcount(pick);
    }
    EXPECT_EQ(c_star(6, 2).value, Interval::exact(best));
}
