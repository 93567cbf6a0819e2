#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace ecc_spectra;
using namespace testing_support;

TEST(Sequence, ParsesCommaSeparatedParts) {
  const auto s = GeneratingSequence::parse("1,2, 1 ,2");
  EXPECT_EQ(s.length(), 4u);
  EXPECT_EQ(s.order(), 6u);
  EXPECT_EQ(s.part_size(2), 2);
  EXPECT_EQ(s.to_string(), "1,2,1,2");
  EXPECT_EQ(s.odd_part_sum(), 2);
  EXPECT_EQ(s.even_part_sum(), 4);
  EXPECT_EQ(s.part_offset(3), 3u);
  EXPECT_TRUE(s.in_main_scope());
}

TEST(Sequence, RejectsMalformedInput) {
  for (const char* bad : {"", "1,,2", "1,x", "1,0", "-1,2", "1,2,", "1.5,2"}) {
    EXPECT_THROW(GeneratingSequence::parse(bad), InvalidSequence) << bad;
  }
  EXPECT_THROW(GeneratingSequence(std::vector<int>{}), InvalidSequence);
}

TEST(Sequence, MainScope) {
  EXPECT_FALSE(GeneratingSequence({1, 2}).in_main_scope());
  EXPECT_FALSE(GeneratingSequence({1, 2, 1}).in_main_scope());
  EXPECT_FALSE(GeneratingSequence({1, 1, 1, 1}).in_main_scope());
  EXPECT_TRUE(GeneratingSequence({1, 1, 1, 2}).in_main_scope());
  EXPECT_THROW(require_main_scope(GeneratingSequence({2, 1, 2, 1})), OutOfScope);
}

TEST(Cograph, SmallestInstances) {
  // C(1,1) = K2, C(1,2) = P3 with the part-1 vertex in the middle.
  const SimpleGraph k2 = build_cograph(GeneratingSequence({1, 1}));
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_TRUE(k2.adjacent(0, 1));

  const SimpleGraph p3 = build_cograph(GeneratingSequence({1, 2}));
  EXPECT_EQ(p3.edge_count(), 2u);
  EXPECT_EQ(p3.degree(0), 2u);
  EXPECT_FALSE(p3.adjacent(1, 2));
}

TEST(Cograph, TwoPartsIsCliqueJoinIndependentSet) {
  for (int a1 = 1; a1 <= 5; ++a1)
    for (int a2 = 1; a2 <= 5; ++a2) {
      const SimpleGraph g = build_cograph(GeneratingSequence({a1, a2}));
      for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v) {
          const bool both_independent = u >= static_cast<std::size_t>(a1) && v >= static_cast<std::size_t>(a1);
          EXPECT_EQ(g.adjacent(u, v), !both_independent);
        }
    }
}

TEST(Cograph, PartLabelsAreContiguous) {
  const auto seq = GeneratingSequence({3, 2, 1, 2});
  const SimpleGraph g = build_cograph(seq);
  for (std::size_t i = 1; i <= seq.length(); ++i)
    for (int c = 0; c < seq.part_size(i); ++c) {
      const std::size_t v = seq.part_offset(i) + static_cast<std::size_t>(c);
      EXPECT_EQ(g.part_of(v), static_cast<int>(i));
      EXPECT_EQ(g.index_in_part(v), static_cast<std::size_t>(c) + 1);
    }
}

TEST(CographProperty, MatchesDirectAdjacencyRule) {
  for (std::size_t t = 0; t < 300; ++t) {
    auto rng = rng_for(11, t);
    const auto seq = random_sequence(rng, 8, 4);
    EXPECT_EQ(build_cograph(seq).adjacency_matrix(), cograph_by_rule(seq)) << seq.to_string();
  }
}

TEST(CographProperty, InducesNoPathOnFourVertices) {
  for (std::size_t t = 0; t < 60; ++t) {
    auto rng = rng_for(12, t);
    const auto seq = random_sequence(rng, 6, 3);
    const SimpleGraph g = build_cograph(seq);
    const std::size_t n = g.order();
    std::vector<std::size_t> idx(4);
    for (idx[0] = 0; idx[0] < n; ++idx[0])
      for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
        for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
          for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3]) {
            // P4 is the only 4-vertex graph with 3 edges and degrees {1,1,2,2}.
            std::multiset<int> degrees;
            int edges = 0;
            for (int a = 0; a < 4; ++a) {
              int d = 0;
              for (int b = 0; b < 4; ++b)
                if (a != b && g.adjacent(idx[a], idx[b])) ++d;
              degrees.insert(d);
              edges += d;
            }
            ASSERT_FALSE(edges == 6 && degrees == std::multiset<int>({1, 1, 2, 2})) << seq.to_string();
          }
  }
}

TEST(CographProperty, ConnectedWithDiameterTwoBeyondOnePart) {
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = rng_for(13, t);
    const auto seq = random_sequence(rng, 10, 5);
    if (seq.length() < 2) continue;
    const SimpleGraph g = build_cograph(seq);
    ASSERT_TRUE(is_connected(g)) << seq.to_string();
    const IntMatrix d = distance_matrix(g);
    std::int64_t diameter = 0;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) diameter = std::max(diameter, d(i, j));
    EXPECT_LE(diameter, 2) << seq.to_string();
  }
}

TEST(Antiregular, AtMostTwoVerticesShareADegree) {
  for (std::size_t m = 1; m <= 21; ++m) {
    const IntMatrix a = antiregular_adjacency(m);
    std::vector<std::int64_t> degrees(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) degrees[i] += a(i, j);
    std::sort(degrees.begin(), degrees.end());
    std::size_t repeats = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (degrees[i] == degrees[i - 1]) ++repeats;
    EXPECT_EQ(repeats, m >= 2 ? 1u : 0u) << m;
    EXPECT_TRUE(is_connected(build_cograph(GeneratingSequence(std::vector<int>(m, 1)))));
  }
}

TEST(Graph, ComplementIsAnInvolution) {
  for (std::size_t t = 0; t < 50; ++t) {
    auto rng = rng_for(14, t);
    const SimpleGraph g = build_cograph(random_sequence(rng, 6, 4));
    const SimpleGraph c = complement(g);
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(g.edge_count() + c.edge_count(), g.order() * (g.order() - 1) / 2);
  }
}

TEST(Graph, DisjointUnionShiftsParts) {
  SimpleGraph a = SimpleGraph::complete(2);
  SimpleGraph b = SimpleGraph::complete(3);
  const SimpleGraph u = disjoint_union(a, b);
  EXPECT_EQ(u.order(), 5u);
  EXPECT_EQ(u.edge_count(), 4u);
  EXPECT_FALSE(u.adjacent(1, 2));
  EXPECT_EQ(u.part_of(4), 2);
}

TEST(Distance, MatchesFloydWarshall) {
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = rng_for(15, t);
    const auto seq = random_sequence(rng, 8, 4);
    if (seq.length() < 2) continue;
    const SimpleGraph g = build_cograph(seq);
    EXPECT_EQ(distance_matrix(g), floyd_warshall(g.adjacency_matrix())) << seq.to_string();
  }
}

TEST(Distance, PathAndDisconnected) {
  SimpleGraph p(4);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  p.add_edge(2, 3);
  const IntMatrix d = distance_matrix(p);
  EXPECT_EQ(d(0, 3), 3);
  EXPECT_EQ(eccentricities(d), (std::vector<std::int64_t>{3, 2, 2, 3}));

  EXPECT_THROW(distance_matrix(SimpleGraph::empty(2)), DisconnectedGraph);
  // C(a1) alone is the empty graph.
  EXPECT_THROW(distance_matrix(build_cograph(GeneratingSequence({3}))), DisconnectedGraph);
}
