#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "mvlab/errors.hpp"
#include "mvlab/family_graph.hpp"
#include "mvlab/hypergraph.hpp"
#include "mvlab/ksubset.hpp"
#include "mvlab/vertex_set.hpp"

using namespace mvlab;

TEST(Binomial, MatchesPascal) {
    std::vector<std::vector<std::uint64_t>> c(65, std::vector<std::uint64_t>(65, 0));
    for (int n = 0; n <= 64; ++n) {
        c[n][0] = 1;
        for (int r = 1; r <= n; ++r) c[n][r] = c[n - 1][r - 1] + (r <= n - 1 ? c[n - 1][r] : 0);
    }
    for (int n = 0; n <= 64; ++n)
        for (int r = 0; r <= n; ++r) EXPECT_EQ(binomial(n, r), c[n][r]) << n << " " << r;
    EXPECT_EQ(binomial(5, 6), 0u);
    EXPECT_EQ(binomial(5, -1), 0u);
}

TEST(ColexRank, RoundTripsAndFollowsNumericOrder) {
    for (int n = 1; n <= 10; ++n)
        for (int r = 1; r <= n; ++r) {
            auto sets = brute::sets_of_size(n, r);
            for (std::size_t i = 0; i < sets.size(); ++i) {
                EXPECT_EQ(colex_rank(sets[i]), i);
                EXPECT_EQ(colex_unrank(i, r), sets[i]);
                if (i + 1 < sets.size()) {
                    EXPECT_EQ(next_same_popcount(sets[i]), sets[i + 1]);
                }
            }
        }
}

TEST(ColexRank, RandomLargeMasksRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t m = rng() & full_mask(60);
        if (!m) continue;
        EXPECT_EQ(colex_unrank(colex_rank(m), std::popcount(m)), m);
    }
}

TEST(SubmaskEnumeration, VisitsEveryRSubsetOnceInColexOrder) {
    std::uint64_t universe = 0b1011'0110'1101;
    for (int r = 0; r <= std::popcount(universe); ++r) {
        std::vector<std::uint64_t> seen;
        for_each_submask_of_size(universe, r, [&](std::uint64_t m) { seen.push_back(m); });
        std::vector<std::uint64_t> expect;
        for (std::uint64_t m = 0; m <= universe; ++m)
            if ((m & ~universe) == 0 && std::popcount(m) == r) expect.push_back(m);
        EXPECT_EQ(seen, expect) << "r=" << r;
    }
}

TEST(KSubset, ElementsAndComplement) {
    KSubset s(6, {1, 3, 6});
    EXPECT_EQ(s.bits(), 0b100101u);
    EXPECT_EQ(s.elements(), (std::vector<int>{1, 3, 6}));
    EXPECT_EQ(s.complement(), KSubset(6, {2, 4, 5}));
    EXPECT_EQ(s.to_string(), "{1,3,6}");
    EXPECT_THROW(KSubset(4, {5}), DomainError);
}

TEST(FamilyGraph, RangesAreEnforced) {
    EXPECT_THROW(FamilyGraph::kneser(4, 2), ConstraintError);
    EXPECT_THROW(FamilyGraph::johnson(3, 2), ConstraintError);
    EXPECT_THROW(FamilyGraph::bipartite_kneser(4, 2), ConstraintError);
    EXPECT_THROW(FamilyGraph::kneser(7, 1), ConstraintError);
    try {
        FamilyGraph::kneser(4, 2);
    } catch (const ConstraintError& e) {
        EXPECT_EQ(e.constraint(), "n>=2k+1");
    }
}

TEST(FamilyGraph, ParseAndSpecRoundTrip) {
    for (const char* s : {"kneser:n=7,k=2", "bipartite-kneser:n=7,k=2", "johnson:n=5,k=2"}) {
        EXPECT_EQ(FamilyGraph::parse(s).spec(), s);
    }
    EXPECT_THROW(FamilyGraph::parse("petersen"), ConstraintError);
}

TEST(FamilyGraph, VertexCounts) {
    EXPECT_EQ(FamilyGraph::kneser(5, 2).vertex_count(), 10u);
    EXPECT_EQ(FamilyGraph::bipartite_kneser(7, 2).vertex_count(), 42u);
    EXPECT_EQ(FamilyGraph::johnson(6, 3).vertex_count(), 20u);
}

TEST(FamilyGraph, IndexOfInvertsVertex) {
    for (auto g : {FamilyGraph::kneser(7, 3), FamilyGraph::bipartite_kneser(7, 2), FamilyGraph::johnson(6, 2)}) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.index_of(g.vertex(v)), v);
        EXPECT_THROW(g.index_of(KSubset(g.n(), {1})), DomainError);
    }
}

namespace {

void expect_same_graph(const FamilyGraph& g, const brute::Graph& b) {
    ASSERT_EQ(g.vertex_count(), b.vertex.size());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        ASSERT_EQ(g.vertex(u).bits(), b.vertex[u]);
        auto row = g.bfs_from(u);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            EXPECT_EQ(g.adjacent(u, v), static_cast<bool>(b.adj[u][v]));
            EXPECT_EQ(g.distance(u, v), b.dist[u][v]) << g.spec() << " " << u << " " << v;
            EXPECT_EQ(row[v], b.dist[u][v]);
        }
    }
}

} // namespace

TEST(FamilyGraph, KneserDistancesMatchBfsOracle) {
    for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}})
        expect_same_graph(FamilyGraph::kneser(n, k), brute::kneser(n, k));
}

TEST(FamilyGraph, JohnsonDistancesMatchBfsOracle) {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}, {7, 3}})
        expect_same_graph(FamilyGraph::johnson(n, k), brute::johnson(n, k));
}

TEST(FamilyGraph, BipartiteKneserMatchesBfsOracle) {
    for (auto [n, k] : {std::pair{5, 2}, {7, 2}, {7, 3}})
        expect_same_graph(FamilyGraph::bipartite_kneser(n, k), brute::bipartite_kneser(n, k));
}

TEST(FamilyGraph, DiameterMatchesOracle) {
    auto b = brute::kneser(5, 2);
    int d = 0;
    for (auto& row : b.dist) d = std::max(d, *std::max_element(row.begin(), row.end()));
    EXPECT_EQ(FamilyGraph::kneser(5, 2).diameter(), d);
    EXPECT_EQ(FamilyGraph::johnson(6, 3).diameter(), 3);
}

TEST(FamilyGraph, ComplementIsAnAutomorphismOfBipartiteKneser) {
    auto g = FamilyGraph::bipartite_kneser(7, 2);
    auto all = g.enumerate_vertices();
    for (const auto& a : all)
        for (const auto& b : all) {
            auto ca = g.complement_automorphism(a), cb = g.complement_automorphism(b);
            EXPECT_EQ(g.adjacent(a, b), g.adjacent(ca, cb));
            EXPECT_EQ(g.distance(a, b), g.distance(ca, cb));
        }
    EXPECT_THROW(FamilyGraph::kneser(5, 2).complement_automorphism(KSubset(5, {1, 2})), DomainError);
}

TEST(DistanceTable, SpheresPartitionTheVertexSet) {
    auto g = FamilyGraph::johnson(6, 3);
    DistanceTable t(g);
    for (VertexId v = 0; v < t.size(); ++v) {
        std::size_t total = 0;
        for (int d = 0; d <= t.diameter(); ++d) {
            total += t.sphere(v, d).count();
            t.sphere(v, d).for_each([&](std::size_t u) { EXPECT_EQ(t.dist(v, static_cast<VertexId>(u)), d); });
        }
        EXPECT_EQ(total, t.size());
        EXPECT_EQ(t.neighbors(v), t.sphere(v, 1));
    }
}

TEST(VertexSet, MembersAndComplement) {
    auto g = FamilyGraph::kneser(5, 2);
    std::vector<KSubset> m{KSubset(5, {1, 2}), KSubset(5, {4, 5})};
    VertexSet x(g, m);
    EXPECT_EQ(x.size(), 2u);
    EXPECT_TRUE(x.contains(KSubset(5, {4, 5})));
    EXPECT_EQ(x.complement().size(), 8u);
    EXPECT_EQ(x.members(), m);
    std::vector<KSubset> bad{KSubset(5, {1, 2, 3})};
    EXPECT_THROW(VertexSet(g, bad), DomainError);
}

TEST(Hypergraph, TextRoundTrip) {
    Hypergraph h(6, 3, std::vector<std::uint64_t>{0b000111, 0b111000, 0b010101});
    auto again = Hypergraph::parse(h.to_text());
    EXPECT_EQ(again, h);
    std::istringstream in(h.to_text());
    EXPECT_EQ(Hypergraph::read(in), h);
}

TEST(Hypergraph, RejectsMalformedInput) {
    EXPECT_THROW(Hypergraph::parse("4 2\n1 x\n"), ConstraintError);
    EXPECT_THROW(Hypergraph::parse("4 2\n2 1\n"), ConstraintError);
    EXPECT_THROW(Hypergraph(4, 2, std::vector<std::uint64_t>{0b111}), DomainError);
    EXPECT_THROW(Hypergraph(4, 2, std::vector<std::uint64_t>{0b11, 0b11}), DomainError);
}

TEST(Hypergraph, UnderlyingHypergraphOfAVertexSet) {
    auto g = FamilyGraph::johnson(4, 2);
    VertexSet x(g);
    x.insert(KSubset(4, {1, 2}));
    x.insert(KSubset(4, {3, 4}));
    auto f = underlying_hypergraph(x);
    EXPECT_EQ(f.n(), 4);
    EXPECT_EQ(f.edge_count(), 2u);
    EXPECT_TRUE(f.has_edge(0b0011));
    EXPECT_TRUE(f.has_edge(0b1100));
}
