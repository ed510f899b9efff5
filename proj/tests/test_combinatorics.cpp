#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "moonfill/combinatorics.hpp"

using namespace moonfill;

namespace {

const SimpleGraph kEightEdgeGraph(11, {{1, 9}, {2, 3}, {2, 4}, {3, 7}, {5, 6}, {6, 9}, {6, 11}, {9, 10}});

// Largest subset of edges that pairwise satisfy rel, by trying every subset.
template <class Rel>
int brute_max(const SimpleGraph& g, Rel rel) {
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  const int k = static_cast<int>(e.size());
  int best = 0;
  for (int mask = 1; mask < (1 << k); ++mask) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !rel(e[a], e[b])) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(ArcStatistics, FrozenValues) {
  EXPECT_EQ(cros2(SimpleGraph(4, {})), 0);
  EXPECT_EQ(nest2(SimpleGraph(4, {})), 0);
  SimpleGraph crossing(4, {{1, 3}, {2, 4}});
  EXPECT_EQ(cros2(crossing), 1);
  EXPECT_EQ(nest2(crossing), 0);
  EXPECT_EQ(cros2(kEightEdgeGraph), 4);
  EXPECT_EQ(nest2(kEightEdgeGraph), 6);
  SimpleGraph nested(6, {{1, 6}, {2, 5}, {3, 4}});
  EXPECT_EQ(nest_max(nested), 3);
  EXPECT_EQ(cros_max(nested), 1);
  EXPECT_EQ(cros_max(SimpleGraph(3, {{1, 2}})), 1);
  EXPECT_EQ(nest_max(SimpleGraph(3, {})), 0);
}

TEST(ArcStatistics, SharedEndpointsNeitherCrossNorNest) {
  EXPECT_FALSE(edges_cross({1, 3}, {3, 5}));
  EXPECT_FALSE(edges_nest({1, 5}, {1, 3}));
  EXPECT_FALSE(edges_nest({1, 5}, {3, 5}));
  EXPECT_TRUE(edges_cross({2, 4}, {1, 3}));
  EXPECT_TRUE(edges_nest({2, 3}, {1, 4}));
}

TEST(ArcStatistics, CliqueSearchMatchesSubsets) {
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, [](const SimpleGraph& g) {
      ASSERT_EQ(cros_max(g), brute_max(g, edges_cross));
      ASSERT_EQ(nest_max(g), brute_max(g, edges_nest));
    });
}

TEST(Representations, StandardRepresentation) {
  auto pi = parse_set_partition("{1,9,10}{2,3,7}{4}{5,6,11}{8}");
  EXPECT_EQ(standard_repr(pi), SimpleGraph(11, {{1, 9}, {9, 10}, {2, 3}, {3, 7}, {5, 6}, {6, 11}}));
  EXPECT_EQ(cros_max(standard_repr(pi)), 2);
  EXPECT_EQ(standard_repr(SetPartition(4, {{1}, {2}, {3}, {4}})).size(), 0u);
  EXPECT_EQ(standard_repr(SetPartition(4, {{1, 2, 3, 4}})), SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  auto oc = opener_closer(pi);
  EXPECT_EQ(oc.openers, (std::set<int>{1, 2, 3, 5, 6, 9}));
  EXPECT_EQ(oc.closers, (std::set<int>{3, 6, 7, 9, 10, 11}));
}

TEST(Representations, LinearRepresentation) {
  auto pi = parse_linked_partition("{1,5}{2,3,4}{3,7}{5,6}{6,9,11}{8}{9,10}");
  EXPECT_EQ(linear_repr(pi),
            SimpleGraph(11, {{1, 5}, {2, 3}, {2, 4}, {3, 7}, {5, 6}, {6, 9}, {6, 11}, {9, 10}}));
  EXPECT_EQ(linked_partition_of(linear_repr(pi)), pi);
  EXPECT_EQ(linear_repr(LinkedPartition(3, {{1}, {2}, {3}})).size(), 0u);
}

TEST(Representations, RoundTrips) {
  for (int n = 0; n <= 7; ++n)
    for_each_set_partition(n, [](const SetPartition& pi) { ASSERT_EQ(set_partition_of(standard_repr(pi)), pi); });
  for (int n = 1; n <= 6; ++n)
    for_each_linked_partition(n, [](const LinkedPartition& pi) {
      ASSERT_EQ(linked_partition_of(linear_repr(pi)), pi);
    });
}

TEST(Validation, PartitionsRejectBadBlocks) {
  EXPECT_THROW(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(SetPartition(3, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(SetPartition(2, {{1, 2, 3}}), std::invalid_argument);
  EXPECT_THROW(SetPartition(2, {{1}, {}, {2}}), std::invalid_argument);
  // {1,3} and {2,3} share 3, which is the minimum of neither.
  EXPECT_THROW(LinkedPartition(3, {{1, 3}, {2, 3}}), std::invalid_argument);
  // {1,2} and {2,3} share 2, the minimum of the second block only.
  EXPECT_NO_THROW(LinkedPartition(3, {{1, 2}, {2, 3}}));
  // A singleton {2} may not overlap {1,2}.
  EXPECT_THROW(LinkedPartition(2, {{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(3, {{2, 1}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(3, {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(3, {{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST(Enumerators, Counts) {
  const std::vector<long> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n <= 8; ++n) {
    std::set<SetPartition, bool (*)(const SetPartition&, const SetPartition&)> seen(
        [](const SetPartition& a, const SetPartition& b) { return a.blocks() < b.blocks(); });
    for_each_set_partition(n, [&](const SetPartition& pi) { seen.insert(pi); });
    EXPECT_EQ(static_cast<long>(seen.size()), bell[n]) << n;
  }
  const std::vector<long> matchings{1, 1, 3, 15, 105, 945};
  for (int n = 0; n <= 5; ++n) {
    long count = 0;
    for_each_matching(2 * n, [&](const SetPartition& m) {
      for (auto& b : m.blocks()) ASSERT_EQ(b.size(), 2u);
      ++count;
    });
    EXPECT_EQ(count, matchings[n]);
  }
  long odd = 0;
  for_each_matching(5, [&](const SetPartition&) { ++odd; });
  EXPECT_EQ(odd, 0);
  for (int n = 1; n <= 5; ++n) {
    long count = 0;
    for_each_graph(n, [&](const SimpleGraph&) { ++count; });
    EXPECT_EQ(count, 1L << (n * (n - 1) / 2));
  }
}

TEST(Enumerators, LinkedPartitionsMatchBlockSearch) {
  // Every family of nonempty subsets of [n] that covers [n] and is pairwise
  // nearly disjoint, found by trying all families.
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<Block>> from_blocks;
    const int subsets = (1 << n) - 1;
    for (long fam = 1; fam < (1L << subsets); ++fam) {
      std::vector<Block> blocks;
      for (int s = 0; s < subsets; ++s) {
        if (!(fam >> s & 1)) continue;
        Block b;
        for (int x = 0; x < n; ++x)
          if ((s + 1) >> x & 1) b.push_back(x + 1);
        blocks.push_back(b);
      }
      try {
        from_blocks.insert(LinkedPartition(n, blocks).blocks());
      } catch (const std::invalid_argument&) {
      }
    }
    std::set<std::vector<Block>> generated;
    for_each_linked_partition(n, [&](const LinkedPartition& pi) { generated.insert(pi.blocks()); });
    EXPECT_EQ(generated, from_blocks) << n;
    EXPECT_EQ(static_cast<long>(generated.size()), factorial(n));
  }
}

TEST(Catalan, NoncrossingAndNonnesting) {
  const std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 5; ++n) {
    long nc = 0, nn = 0;
    for_each_matching(2 * n, [&](const SetPartition& m) {
      nc += cros2(m) == 0;
      nn += nest2(m) == 0;
    });
    EXPECT_EQ(nc, catalan[n]);
    EXPECT_EQ(nn, catalan[n]);
  }
  for (int n = 1; n <= 8; ++n) {
    long nc = 0, nn = 0;
    for_each_set_partition(n, [&](const SetPartition& pi) {
      nc += cros2(pi) == 0;
      nn += nest2(pi) == 0;
    });
    EXPECT_EQ(nc, catalan[n]);
    EXPECT_EQ(nn, catalan[n]);
  }
}

TEST(Correspondence, EightEdgeGraph) {
  auto f = graph_to_filling(kEightEdgeGraph);
  EXPECT_EQ(f.shape(), delta(11));
  EXPECT_EQ(f.size(), 8);
  EXPECT_EQ(ne2(f), 6);
  EXPECT_EQ(se2(f), 4);
  EXPECT_EQ(filling_to_graph(f), kEightEdgeGraph);
  EXPECT_TRUE(stat_transport_check(kEightEdgeGraph));
  EXPECT_EQ(graph_to_filling(SimpleGraph(4, {})).size(), 0);
  EXPECT_TRUE(stat_transport_check(SimpleGraph(1, {})));
}

TEST(Correspondence, AllGraphsUpToSix) {
  for (int n = 2; n <= 6; ++n)
    for_each_graph(n, [](const SimpleGraph& g) {
      ASSERT_TRUE(stat_transport_check(g));
      ASSERT_EQ(filling_to_graph(graph_to_filling(g)), g);
    });
}

TEST(ProductFormulas, SmallClass) {
  // Graphs with left endpoints {1,2} and right endpoints {3,4}: one crossing
  // pair and one nesting pair.
  std::vector<SimpleGraph> cls{SimpleGraph(4, {{1, 3}, {2, 4}}), SimpleGraph(4, {{1, 4}, {2, 3}})};
  const Multiset s{1, 2}, t{3, 4};
  auto p = PQPolynomial::p(), q = PQPolynomial::q();
  EXPECT_EQ(cros_nest_distribution(cls), p + q);
  EXPECT_EQ(graph_product_by_closers(s, t), p + q);
  EXPECT_EQ(graph_product_by_openers(s, t), p + q);
  EXPECT_EQ(h_low(s, t, 3), 2);
  EXPECT_EQ(h_high(s, t, 2), 2);
}

TEST(ProductFormulas, GraphClassesUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::pair<Multiset, Multiset>, std::vector<SimpleGraph>> classes;
    for_each_graph(n, [&](const SimpleGraph& g) { classes[{g.left(), g.right()}].push_back(g); });
    for (auto& [key, graphs] : classes) {
      auto dist = cros_nest_distribution(graphs);
      if (all_distinct(key.first)) {
        ASSERT_EQ(dist, graph_product_by_closers(key.first, key.second));
        ASSERT_TRUE(is_symmetric(dist));
      }
      if (all_distinct(key.second)) {
        ASSERT_EQ(dist, graph_product_by_openers(key.first, key.second));
        ASSERT_TRUE(is_symmetric(dist));
      }
    }
  }
}

TEST(TextFormat, BlocksAndGraphs) {
  auto pi = SetPartition(5, {{4, 2}, {1, 5, 3}});
  EXPECT_EQ(to_string(pi), "{1,3,5}{2,4}");
  EXPECT_EQ(parse_set_partition(to_string(pi)), pi);
  EXPECT_EQ(parse_blocks(" {1, 2} {3} "), (std::vector<Block>{{1, 2}, {3}}));
  EXPECT_THROW(parse_blocks("{1,}"), std::invalid_argument);
  EXPECT_THROW(parse_blocks("1,2"), std::invalid_argument);
  EXPECT_THROW(parse_blocks("{1"), std::invalid_argument);
  std::stringstream ss;
  write_graph(ss, kEightEdgeGraph);
  EXPECT_EQ(parse_graph(ss), kEightEdgeGraph);
}
