#include <gtest/gtest.h>

#include <set>

#include "chipfire/partition.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chipfire;

namespace {

std::vector<std::string> formatted(const Multigraph& g, const std::vector<ConnectedPartition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_partition(g, p));
    return out;
}

}  // namespace

TEST(Partition, KiteCuts) {
    const auto g = fixtures::kite();
    EXPECT_EQ(formatted(g, enumerate_connected_partitions(g, 2)),
              (std::vector<std::string>{"{a}|{b,c,d}", "{a,b}|{c,d}", "{a,c}|{b,d}", "{a,b,c}|{d}", "{a,b,d}|{c}",
                                        "{a,c,d}|{b}"}));
}

TEST(Partition, KiteThreeBlocks) {
    const auto g = fixtures::kite();
    const auto parts = formatted(g, enumerate_connected_partitions(g, 3));
    EXPECT_EQ(parts.size(), 5U);
    EXPECT_NE(std::find(parts.begin(), parts.end(), "{a}|{b,d}|{c}"), parts.end());
    EXPECT_EQ(enumerate_connected_partitions(g, 4).size(), 1U);
    EXPECT_EQ(enumerate_connected_partitions(g, 1).size(), 1U);
    EXPECT_TRUE(enumerate_connected_partitions(g, 5).empty());
}

TEST(Partition, CountsMatchSetPartitionScan) {
    gen::Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        const auto g = gen::connected_multigraph(rng, gen::uniform(rng, 2, 7), gen::uniform(rng, 0, 6));
        for (int parts = 1; parts <= g.vertex_count(); ++parts) {
            auto brute = oracle::connected_partitions(g, parts);
            std::set<std::vector<VertexSet>> expected;
            for (auto& b : brute) {
                std::sort(b.begin(), b.end(), [](VertexSet x, VertexSet y) { return x.front() < y.front(); });
                expected.insert(b);
            }
            std::set<std::vector<VertexSet>> got;
            for (const auto& p : enumerate_connected_partitions(g, parts)) got.insert(p.blocks());
            EXPECT_EQ(got, expected);
        }
    }
}

TEST(Partition, RejectsInvalidBlocks) {
    const auto g = fixtures::kite();
    EXPECT_THROW(ConnectedPartition(g, {VertexSet::of({0, 3}), VertexSet::of({1, 2})}), std::invalid_argument);
    EXPECT_THROW(ConnectedPartition(g, {VertexSet::of({0, 1}), VertexSet::of({1, 2, 3})}), std::invalid_argument);
    EXPECT_THROW(ConnectedPartition(g, {VertexSet::of({0, 1})}), std::invalid_argument);
    EXPECT_THROW(parse_partition(g, "{a}|{b,e}|{c,d}"), std::out_of_range);
}

TEST(Partition, Quotient) {
    const auto g = fixtures::kite();
    const auto p = parse_partition(g, "{a}|{b,d}|{c}");
    const auto q = quotient(g, p);
    ASSERT_EQ(q.block_count(), 3);
    EXPECT_EQ(q.multi.mult(0, 1), 1);
    EXPECT_EQ(q.multi.mult(0, 2), 1);
    EXPECT_EQ(q.multi.mult(1, 2), 5);
    EXPECT_EQ(q.simple.mult(1, 2), 1);
    EXPECT_EQ(q.multi.name(1), "{b,d}");
    EXPECT_EQ(q.edges.size(), 3U);

    const auto one = quotient(g, ConnectedPartition(g, {g.vertices()}));
    EXPECT_EQ(one.block_count(), 1);
    EXPECT_TRUE(one.edges.empty());

    const auto full = quotient(g, parse_partition(g, "{a}|{b}|{c}|{d}"));
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v) EXPECT_EQ(full.multi.mult(u, v), g.mult(u, v));
}

TEST(Partition, QuotientDegrees) {
    gen::Rng rng(59);
    for (int i = 0; i < 50; ++i) {
        const auto g = gen::connected_multigraph(rng, gen::uniform(rng, 2, 7), gen::uniform(rng, 0, 6));
        const auto p = gen::partition(rng, g, gen::uniform(rng, 2, g.vertex_count()));
        const auto q = quotient(g, p);
        for (int b = 0; b < p.size(); ++b) {
            int expected = 0;
            const VertexSet rest = g.vertices() - p.block(b);
            for (Vertex v : p.block(b)) expected += crossing_degree(g, p.block(b), rest, v);
            EXPECT_EQ(q.multi.degree(b), expected);
        }
    }
}

TEST(Partition, GeneratingSequences) {
    const auto g = fixtures::kite();
    EXPECT_EQ(generating_sequences(g, parse_partition(g, "{a}|{b,d}|{c}")).size(), 3U);
    for (const auto& cut : enumerate_connected_partitions(g, 2)) EXPECT_EQ(generating_sequences(g, cut).size(), 1U);
    const auto p3 = fixtures::path(3);
    EXPECT_EQ(generating_sequences(p3, parse_partition(p3, "{a}|{b}|{c}")).size(), 2U);
    const auto p4 = fixtures::path(4);
    EXPECT_EQ(generating_sequences(p4, parse_partition(p4, "{a}|{b}|{c}|{d}")).size(), 6U);
}

TEST(Partition, GeneratingSequencesReproducePartition) {
    gen::Rng rng(61);
    for (int i = 0; i < 40; ++i) {
        const auto g = gen::connected_multigraph(rng, gen::uniform(rng, 2, 6), gen::uniform(rng, 0, 5));
        const auto p = gen::partition(rng, g, gen::uniform(rng, 2, g.vertex_count()));
        const auto seqs = generating_sequences(g, p);
        ASSERT_FALSE(seqs.empty());
        std::set<std::pair<Vertex, Vertex>> inter;
        for (const auto& [pair, m] : g.edges())
            if (p.block_of(pair.first) != p.block_of(pair.second)) inter.insert(pair);
        for (const auto& seq : seqs) {
            ASSERT_EQ(static_cast<int>(seq.size()), p.size() - 1);
            auto comps = apply_generating_sequence(g, p, seq);
            std::sort(comps.begin(), comps.end());
            std::vector<VertexSet> singles;
            for (int b = 0; b < p.size(); ++b) singles.push_back(VertexSet::single(b));
            EXPECT_EQ(comps, singles);
            std::set<std::pair<Vertex, Vertex>> severed;
            for (const auto& step : seq) {
                const VertexSet a = p.vertices_of(step.side), b = p.vertices_of(step.other());
                for (const auto& [pair, m] : g.edges()) {
                    auto [u, v] = pair;
                    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) {
                        EXPECT_TRUE(severed.insert(pair).second) << "edge severed twice";
                    }
                }
            }
            EXPECT_EQ(severed, inter);
        }
    }
}

TEST(Partition, CutsIntersect) {
    const auto g = fixtures::kite();
    const auto x = parse_partition(g, "{a}|{b,c,d}");
    const auto y = parse_partition(g, "{a,b}|{c,d}");
    const auto z = parse_partition(g, "{a,c}|{b,d}");
    EXPECT_FALSE(cuts_intersect(x, y));
    EXPECT_TRUE(cuts_intersect(y, z));
    EXPECT_FALSE(cuts_intersect(z, z));
}

TEST(Partition, BoundarySets) {
    const auto t = fixtures::tree6();
    const auto p = parse_partition(t, "{1}|{2,3}|{4}|{5}|{6}");
    const auto v = [&](const char* name) { return t.index_of(name); };
    EXPECT_EQ(boundary_set(t, p, 1, VertexSet::single(0)), VertexSet::single(v("2")));
    EXPECT_TRUE(boundary_set(t, p, 1, VertexSet{}).empty());
    EXPECT_EQ(boundary_set(t, p, 1, VertexSet::of({0, 2, 3, 4})), VertexSet::of({v("2"), v("3")}));
    EXPECT_THROW(boundary_set(t, p, 1, VertexSet::single(1)), std::invalid_argument);
    EXPECT_EQ(partition_boundary(t, p), t.vertices());
}

TEST(Partition, QuotientHasRemovableVertex) {
    gen::Rng rng(67);
    for (int i = 0; i < 60; ++i) {
        const auto g = gen::connected_multigraph(rng, gen::uniform(rng, 3, 7), gen::uniform(rng, 0, 6));
        const auto p = gen::partition(rng, g, gen::uniform(rng, 2, g.vertex_count()));
        const auto q = quotient(g, p);
        bool found = false;
        for (int b = 0; b < p.size() && !found; ++b) {
            found = q.simple.is_connected_subset(q.simple.vertices() - VertexSet::single(b));
        }
        EXPECT_TRUE(found);
    }
}

TEST(Partition, FormatRoundTrip) {
    const auto g = fixtures::kite();
    for (int k = 1; k <= 4; ++k)
        for (const auto& p : enumerate_connected_partitions(g, k))
            EXPECT_EQ(parse_partition(g, format_partition(g, p)), p);
}
