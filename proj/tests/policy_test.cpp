#include "privzone/policy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "privzone/error.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

namespace privzone {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;

TEST(SuppressedSetTest, Fixtures) {
  EXPECT_EQ(suppressed_set(path_graph(4), 1, 1), (NodeSet{0, 1, 2}));
  EXPECT_EQ(suppressed_set(cycle_graph(6), 0, 1), (NodeSet{0, 1, 5}));
  for (NodeId s = 0; s < 6; ++s) EXPECT_EQ(suppressed_set(cycle_graph(6), s, 0), (NodeSet{s}));
  EXPECT_EQ(suppressed_set(path_graph(4), 1, 9).size(), 4u);
}

TEST(BroadcastSetTest, Fixtures) {
  EXPECT_EQ(broadcast_set(path_graph(4), 1, 1), (NodeSet{3}));
  EXPECT_TRUE(broadcast_set(complete_graph(4), 0, 1).empty());
  EXPECT_EQ(broadcast_set(cycle_graph(6), 0, 1), (NodeSet{2, 3, 4}));
}

TEST(BoundarySetTest, Fixtures) {
  EXPECT_EQ(boundary_set(path_graph(4), 1, 1), (NodeSet{3}));
  EXPECT_EQ(boundary_set(cycle_graph(6), 0, 1), (NodeSet{2, 4}));
  EXPECT_TRUE(boundary_set(path_graph(4), 1, 2).empty());
  EXPECT_TRUE(boundary_set(path_graph(4), 1, 5).empty());
}

TEST(ExcludedEdgesTest, Fixtures) {
  EXPECT_EQ(excluded_edges(path_graph(4), 1, 0), (EdgeSet{{0, 1}, {1, 2}}));
  EXPECT_EQ(excluded_edges(path_graph(4), 1, 1).size(), 3u);
  const Graph k5 = complete_graph(5);
  EXPECT_EQ(excluded_edges(k5, 2, 1).size(), k5.edge_count());
}

TEST(CandidateSetTest, PathKeepsMirrorNode) {
  // Node 0 with radius 2 suppresses {0,1,2} exactly like node 1 with radius 1.
  EXPECT_EQ(candidate_set(path_graph(4), 1, 1), (NodeSet{0, 1}));
}

TEST(CandidateSetTest, ZeroRadiusPinsThePrivateNode) {
  for (NodeId s = 0; s < 4; ++s) EXPECT_EQ(candidate_set(path_graph(4), s, 0), (NodeSet{s}));
}

TEST(CandidateSetTest, CycleIsUnique) {
  EXPECT_EQ(candidate_set(cycle_graph(6), 0, 1), (NodeSet{0}));
}

TEST(CandidateSetTest, NeverBroadcastingLeavesEveryNode) {
  EXPECT_EQ(candidate_set(complete_graph(4), 0, 1), (NodeSet{0, 1, 2, 3}));
  EXPECT_EQ(candidate_set(path_graph(4), 1, 2), (NodeSet{0, 1, 2, 3}));
}

TEST(PrivacyUniformTest, Values) {
  const NodeSet one{3};
  const NodeSet two{0, 1};
  NodeSet thousand(1000);
  std::iota(thousand.begin(), thousand.end(), 0);
  EXPECT_EQ(privacy_uniform(one), 1.0);
  EXPECT_EQ(privacy_uniform(two), 0.5);
  EXPECT_EQ(privacy_uniform(thousand), 0.001);
  EXPECT_THROW(privacy_uniform(NodeSet{}), std::logic_error);
}

TEST(PrivacyDensityTest, Values) {
  const NodeSet cand{0, 1};
  EXPECT_EQ(privacy_density(cand, 1, DensityMap({1.0, 3.0})), 0.75);
  EXPECT_EQ(privacy_density(cand, 1, DensityMap({2.0, 0.0})), 0.0);
  EXPECT_EQ(privacy_density(cand, 0, DensityMap({2.5, 2.5, 7.0})), 0.5);
}

TEST(PrivacyDensityTest, Errors) {
  const NodeSet cand{0, 1};
  EXPECT_THROW(privacy_density(cand, 0, DensityMap({0.0, 0.0, 1.0})), InputError);
  EXPECT_THROW(privacy_density(cand, 2, DensityMap({1.0, 1.0, 1.0})), InputError);
  EXPECT_THROW(DensityMap({0.0, 0.0}), InputError);
  EXPECT_THROW(DensityMap({1.0, -1.0}), InputError);
  EXPECT_THROW(DensityMap({1.0, std::nan("")}), InputError);
}

TEST(PrivacyDensityTest, ConstantDensityIsBitIdenticalToUniform) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> level(1e-3, 1e3);
  for (std::size_t k = 1; k <= 200; ++k) {
    NodeSet cand(k);
    std::iota(cand.begin(), cand.end(), 0);
    const DensityMap rho(std::vector<double>(k, level(rng)));
    EXPECT_EQ(privacy_density(cand, static_cast<NodeId>(k / 2), rho), privacy_uniform(cand));
  }
}

TEST(AsymmetricPrivacyTest, Values) {
  EXPECT_EQ(asymmetric_privacy({{2}, 2}), 1.0);
  EXPECT_EQ(asymmetric_privacy({{0, 1, 2, 3}, 1}), 0.25);
  const NodeSet ball = suppressed_set(path_graph(4), 1, 1);
  const double asym = asymmetric_privacy({ball, 1});
  EXPECT_DOUBLE_EQ(asym, 1.0 / 3.0);
  EXPECT_LE(asym, privacy_uniform(candidate_set(path_graph(4), 1, 1)));
  EXPECT_THROW(asymmetric_privacy({{0, 2}, 1}), InputError);
}

TEST(AnalyzeTest, PathFixture) {
  const auto a = analyze(path_graph(4), 1, 1);
  EXPECT_EQ(a.suppressed, (NodeSet{0, 1, 2}));
  EXPECT_EQ(a.broadcast, (NodeSet{3}));
  EXPECT_EQ(a.boundary, (NodeSet{3}));
  EXPECT_EQ(a.candidates, (NodeSet{0, 1}));
  EXPECT_EQ(a.privacy, 0.5);
  EXPECT_EQ(a.cost, 3u);
  EXPECT_FALSE(a.density_prior);

  const auto zero = analyze(path_graph(4), 1, 0);
  EXPECT_EQ(zero.privacy, 1.0);
  EXPECT_EQ(zero.cost, 2u);
}

TEST(AnalyzeTest, CompleteGraphNeverBroadcasts) {
  const auto a = analyze(complete_graph(4), 0, 1);
  EXPECT_TRUE(a.broadcast.empty());
  EXPECT_EQ(a.candidates, (NodeSet{0, 1, 2, 3}));
  EXPECT_EQ(a.privacy, 0.25);
  EXPECT_EQ(a.cost, 6u);
}

TEST(AnalyzeTest, DensityPrior) {
  const auto a = analyze(path_graph(4), 1, 1, DensityMap({1.0, 3.0, 5.0, 7.0}));
  EXPECT_TRUE(a.density_prior);
  EXPECT_EQ(a.privacy, 0.75);
  EXPECT_THROW(analyze(path_graph(4), 1, 1, DensityMap({1.0, 3.0})), InputError);
}

TEST(AnalyzeTest, Errors) {
  EXPECT_THROW(analyze(path_graph(4), 4, 0), InputError);
  EXPECT_THROW(analyze(Graph(3, std::vector<Edge>{{0, 1}}), 0, 0), DisconnectedGraphError);
}

// Structural invariants of one analysis.
void check_structure(const Graph& g, const PolicyAnalysis& a) {
  NodeSet all;
  std::set_union(a.suppressed.begin(), a.suppressed.end(), a.broadcast.begin(), a.broadcast.end(),
                 std::back_inserter(all));
  ASSERT_EQ(all.size(), g.node_count());
  ASSERT_EQ(a.suppressed.size() + a.broadcast.size(), g.node_count());
  ASSERT_TRUE(std::binary_search(a.candidates.begin(), a.candidates.end(), a.private_node));
  ASSERT_TRUE(std::includes(a.suppressed.begin(), a.suppressed.end(), a.candidates.begin(),
                            a.candidates.end()));
  ASSERT_TRUE(std::includes(a.broadcast.begin(), a.broadcast.end(), a.boundary.begin(),
                            a.boundary.end()));
  const auto layers = bfs_layers(g, a.private_node);
  ASSERT_EQ(a.boundary, layers.at(a.radius + 1));
  for (NodeId b : a.boundary) {
    const auto nb = g.neighbors(b);
    ASSERT_TRUE(std::any_of(nb.begin(), nb.end(), [&](NodeId w) {
      return std::binary_search(a.suppressed.begin(), a.suppressed.end(), w);
    }));
  }
  EdgeSet restated;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(a.suppressed.begin(), a.suppressed.end(), e.u) ||
        std::binary_search(a.suppressed.begin(), a.suppressed.end(), e.v)) {
      restated.push_back(e);
    }
  }
  ASSERT_EQ(a.excluded_edges, restated);
  ASSERT_EQ(a.cost, a.excluded_edges.size());
  ASSERT_EQ(a.privacy, 1.0 / static_cast<double>(a.candidates.size()));
}

TEST(PolicyPropertyTest, CandidatesMatchEnumerationOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : testing::nonisomorphic_connected_graphs(n)) {
      for (NodeId s = 0; s < n; ++s) {
        const std::uint32_t ecc = eccentricity(g, s);
        for (std::uint32_t h = 0; h <= ecc + 1; ++h) {
          const auto a = analyze(g, s, h);
          check_structure(g, a);
          ASSERT_EQ(a.candidates, testing::candidates_by_enumeration(g, s, h))
              << "n=" << n << " s=" << s << " h=" << h;
        }
      }
    }
  }
}

TEST(PolicyPropertyTest, CandidatesMatchEnumerationOnRandomRggs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_small_rgg(40, rng);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(g.node_count() - 1));
    const NodeId s = pick(rng);
    for (std::uint32_t h = 0; h <= eccentricity(g, s); ++h) {
      const auto a = analyze(g, s, h);
      check_structure(g, a);
      ASSERT_EQ(a.candidates, testing::candidates_by_enumeration(g, s, h)) << "trial " << trial;
    }
  }
}

TEST(PolicyPropertyTest, MonotoneInRadius) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 50);
    const Graph g = testing::random_connected_graph(size(rng), 0.05, rng);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      const std::uint32_t ecc = eccentricity(g, s);
      auto prev = analyze(g, s, 0);
      EXPECT_EQ(prev.privacy, 1.0);
      for (std::uint32_t h = 1; h <= ecc + 1; ++h) {
        const auto cur = analyze(g, s, h);
        EXPECT_TRUE(std::includes(cur.suppressed.begin(), cur.suppressed.end(),
                                  prev.suppressed.begin(), prev.suppressed.end()));
        EXPECT_TRUE(std::includes(prev.broadcast.begin(), prev.broadcast.end(),
                                  cur.broadcast.begin(), cur.broadcast.end()));
        EXPECT_LE(prev.cost, cur.cost);
        prev = cur;
      }
      EXPECT_EQ(prev.privacy, 1.0 / static_cast<double>(g.node_count()));
    }
  }
}

TEST(PolicyPropertyTest, AsymmetricBoundHolds) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_small_rgg(30, rng);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      for (std::uint32_t h = 0; h <= eccentricity(g, s); ++h) {
        const auto a = analyze(g, s, h);
        EXPECT_LE(asymmetric_privacy({a.suppressed, s}), a.privacy);
      }
    }
  }
}

}  // namespace
}  // namespace privzone
