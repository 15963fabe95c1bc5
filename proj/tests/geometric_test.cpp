#include "privzone/geometric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "privzone/error.hpp"

namespace privzone {
namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

TEST(GenerateRggTest, PaperScaleSetup) {
  const GeoGraph geo = generate_rgg(1000, 0.1, 1);
  EXPECT_TRUE(geo.graph.connected());
  EXPECT_EQ(geo.graph.node_count() + geo.discarded, 1000u);
  EXPECT_EQ(geo.positions.size(), geo.graph.node_count());
  EXPECT_GT(geo.graph.node_count(), 900u);
}

TEST(GenerateRggTest, MaximalRadiusJoinsEverything) {
  const GeoGraph geo = generate_rgg(2, std::numbers::sqrt2, 99);
  EXPECT_EQ(geo.graph.node_count(), 2u);
  EXPECT_EQ(geo.graph.edge_count(), 1u);
  EXPECT_EQ(geo.discarded, 0u);
}

TEST(GenerateRggTest, DeterministicPerSeed) {
  const GeoGraph a = generate_rgg(50, 0.3, 7);
  const GeoGraph b = generate_rgg(50, 0.3, 7);
  EXPECT_EQ(a.graph, b.graph);
  ASSERT_EQ(a.positions.size(), b.positions.size());
  for (std::size_t v = 0; v < a.positions.size(); ++v) {
    EXPECT_EQ(a.positions[v].x, b.positions[v].x);
    EXPECT_EQ(a.positions[v].y, b.positions[v].y);
  }
  EXPECT_NE(generate_rgg(50, 0.3, 8).graph, a.graph);
}

TEST(GenerateRggTest, EdgesMatchRadiusExactly) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double radius = 0.05 + 0.02 * static_cast<double>(seed);
    const GeoGraph geo = generate_rgg(150, radius, seed);
    const auto& g = geo.graph;
    for (NodeId a = 0; a < g.node_count(); ++a) {
      const auto& pa = geo.positions[a];
      EXPECT_GE(pa.x, 0.0);
      EXPECT_LT(pa.x, 1.0);
      for (NodeId b = a + 1; b < g.node_count(); ++b) {
        const double dx = pa.x - geo.positions[b].x;
        const double dy = pa.y - geo.positions[b].y;
        EXPECT_EQ(g.has_edge(a, b), dx * dx + dy * dy <= radius * radius)
            << "seed " << seed << " pair " << a << "," << b << " at "
            << distance(pa, geo.positions[b]);
      }
    }
  }
}

TEST(GenerateRggTest, KeepsLargestComponent) {
  // Radius small enough that the sample splits into many components.
  const GeoGraph geo = generate_rgg(200, 0.05, 4);
  EXPECT_TRUE(geo.graph.connected());
  EXPECT_GT(geo.discarded, 0u);
  EXPECT_EQ(geo.original_id.size(), geo.graph.node_count());
  EXPECT_TRUE(std::is_sorted(geo.original_id.begin(), geo.original_id.end()));
}

TEST(GenerateRggTest, RejectsBadArguments) {
  EXPECT_THROW(generate_rgg(1, 0.5, 0), InputError);
  EXPECT_THROW(generate_rgg(10, 0.0, 0), InputError);
  EXPECT_THROW(generate_rgg(10, 1.5, 0), InputError);
  // Two points essentially never fall within 1e-9 of each other.
  EXPECT_THROW(generate_rgg(2, 1e-9, 0), GraphError);
}

}  // namespace
}  // namespace privzone
