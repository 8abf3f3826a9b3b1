#include <gtest/gtest.h>

#include <random>

#include "domcomplex/graph.hpp"
#include "oracles.hpp"

using namespace domcomplex;

namespace {

LabeledGraph g(const char* text, int n) { return LabeledGraph::parse(text, VertexCount(n)); }

VertexMask vs(std::initializer_list<int> vertices)
{
    VertexMask m = 0;
    for (int v : vertices)
        m |= VertexMask{1} << (v - 1);
    return m;
}

oracle::EdgeList to_oracle(const LabeledGraph& graph)
{
    oracle::EdgeList out;
    for (const auto& e : graph.edge_list())
        out.emplace_back(e.i, e.j);
    return out;
}

} // namespace

TEST(EdgeIndex, Examples)
{
    EXPECT_EQ(edge_index(1, 2, 5), 0);
    EXPECT_EQ(edge_index(2, 3, 5), 4);
    EXPECT_EQ(edge_index(3, 4, 4), 5);
    EXPECT_EQ(edge_index(4, 5, 5), 9);
}

TEST(EdgeIndex, Rejects)
{
    EXPECT_THROW(edge_index(3, 3, 5), InvalidEdge);
    EXPECT_THROW(edge_index(4, 2, 5), InvalidEdge);
    EXPECT_THROW(edge_index(0, 2, 5), InvalidEdge);
    EXPECT_THROW(edge_index(1, 6, 5), InvalidEdge);
    EXPECT_THROW(VertexCount(17), InvalidVertexCount);
    EXPECT_THROW(VertexCount(-1), InvalidVertexCount);
}

// edge_index is a bijection onto [0, C(n,2)) and follows lexicographic order.
TEST(EdgeIndex, LexicographicBijection)
{
    for (int n = 2; n <= kMaxVertices; ++n) {
        int expected = 0;
        for (const auto& [i, j] : oracle::all_pairs(n)) {
            ASSERT_EQ(edge_index(i, j, n), expected);
            const Edge e = edge_from_index(expected, n);
            ASSERT_EQ(e.i, i);
            ASSERT_EQ(e.j, j);
            ++expected;
        }
        EXPECT_EQ(expected, edge_count(n));
    }
}

TEST(LabeledGraph, ParseAndPrint)
{
    const auto c4 = g("13|14|23|24", 4);
    EXPECT_EQ(c4.size(), 4);
    EXPECT_EQ(c4.dimension(), 3);
    EXPECT_EQ(c4.to_string(), "13|14|23|24");
    EXPECT_EQ(g("24|13|14|23", 4), c4);
    EXPECT_EQ(g("31|41|32|42", 4), c4);
    EXPECT_THROW(g("1x", 4), InvalidEdge);
    EXPECT_THROW(g("15", 4), InvalidEdge);
    const auto big = g("1-10|9-12", 12);
    EXPECT_EQ(big.size(), 2);
    EXPECT_EQ(LabeledGraph::parse(big.to_string(), VertexCount(12)), big);
    EXPECT_EQ(g("", 4).size(), 0);
}

TEST(LabeledGraph, RejectsOutOfRangeMask)
{
    EXPECT_THROW(LabeledGraph(VertexCount(3), EdgeMask{1} << 3), InvalidEdge);
}

TEST(Dominates, Examples)
{
    EXPECT_TRUE(dominates(vs({1, 2}), g("13|14|23|24", 4)));
    EXPECT_FALSE(dominates(vs({3}), g("12", 3)));
    EXPECT_TRUE(dominates(vs({1, 2, 3}), g("12", 3)));
    EXPECT_FALSE(dominates(vs({}), g("12", 3)));
}

TEST(DominationNumber, Examples)
{
    EXPECT_EQ(domination_number(LabeledGraph(VertexCount(5), 0)), 5);
    EXPECT_EQ(domination_number(g("12", 6)), 5);
    EXPECT_EQ(domination_number(LabeledGraph(VertexCount(5), (EdgeMask{1} << 10) - 1)), 1);
    // 4-cycle on 1..4 plus three isolated vertices.
    EXPECT_EQ(domination_number(g("13|14|23|24", 7)), 5);
    // Convention: the empty vertex set dominates the graph on zero vertices.
    EXPECT_EQ(domination_number(LabeledGraph(VertexCount(0), 0)), 0);
}

TEST(DominationAtLeast, Examples)
{
    EXPECT_TRUE(domination_at_least(g("34|45", 5), 3));
    EXPECT_FALSE(domination_at_least(g("34|45", 5), 4));
    EXPECT_TRUE(domination_at_least(g("12", 4), 0));
    EXPECT_TRUE(domination_at_least(g("12", 4), -2));
    EXPECT_FALSE(domination_at_least(g("12", 4), 5));
}

// Every graph on up to 5 vertices against the brute-force oracle, and
// domination_at_least consistent with domination_number for every k.
TEST(DominationNumber, MatchesOracleExhaustively)
{
    for (int n = 1; n <= 5; ++n) {
        const int m = edge_count(n);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            const LabeledGraph graph(VertexCount(n), s);
            const int gamma = domination_number(graph);
            ASSERT_EQ(gamma, oracle::gamma(n, to_oracle(graph))) << graph.to_string();
            for (int k = 0; k <= n + 1; ++k)
                ASSERT_EQ(domination_at_least(graph, k), gamma >= k);
        }
    }
}

TEST(DominationNumber, MatchesOracleOnRandomGraphs)
{
    std::mt19937_64 rng(20261019);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        const EdgeMask mask = rng() & ((EdgeMask{1} << edge_count(n)) - 1);
        const LabeledGraph graph(VertexCount(n), mask);
        ASSERT_EQ(domination_number(graph), oracle::gamma(n, to_oracle(graph))) << graph.to_string();
    }
}

// Adding an edge never raises gamma.
TEST(DominationNumber, MonotoneUnderEdgeAddition)
{
    std::mt19937_64 rng(7);
    int violations = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int m = edge_count(n);
        const EdgeMask mask = rng() & ((EdgeMask{1} << m) - 1);
        const int e = static_cast<int>(rng() % m);
        const LabeledGraph before(VertexCount(n), mask);
        if (domination_number(before.plus(e)) > domination_number(before))
            ++violations;
    }
    EXPECT_EQ(violations, 0);
}

// Max-degree bound: gamma <= n - Delta, every graph with n <= 7.
TEST(GammaFacts, MaxDegreeBoundExhaustive)
{
    for (int n = 2; n <= 7; ++n) {
        const int m = edge_count(n);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            const LabeledGraph graph(VertexCount(n), s);
            const auto deg = graph.degrees();
            const int max_deg = *std::max_element(deg.begin(), deg.end());
            ASSERT_LE(domination_number(graph), n - max_deg) << graph.to_string();
            ASSERT_FALSE(domination_at_least(graph, n - max_deg + 1));
        }
    }
}

// Graphs with zero, one and two edges have gamma = n, n - 1, n - 2.
TEST(GammaFacts, FewEdgesExhaustive)
{
    for (int n = 2; n <= 8; ++n) {
        const int m = edge_count(n);
        EXPECT_EQ(domination_number(LabeledGraph(VertexCount(n), 0)), n);
        for (int a = 0; a < m; ++a) {
            ASSERT_EQ(domination_number(LabeledGraph(VertexCount(n), edge_bit(a))), n - 1);
            for (int b = a + 1; b < m; ++b)
                ASSERT_EQ(domination_number(LabeledGraph(VertexCount(n), edge_bit(a) | edge_bit(b))), n - 2)
                    << LabeledGraph(VertexCount(n), edge_bit(a) | edge_bit(b)).to_string();
        }
    }
}
