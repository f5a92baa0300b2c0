#include <gtest/gtest.h>

#include "ftoracle/dso.hpp"
#include "ftoracle/generators.hpp"
#include "ftoracle/hdph.hpp"
#include "ftoracle/serialize.hpp"
#include "ftoracle/shortest_paths.hpp"
#include "oracles.hpp"

using namespace fto;

namespace {

PivotHierarchy build(const Graph& g, HdphOptions options) {
  const ApspData a(g);
  const ReferenceDso dso(g, a);
  return hdph(a, dso, options);
}

std::vector<Vertex> all(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

// Independent hitting check for failure-free distances.
std::size_t failure_free_violations(const Graph& g, const PivotHierarchy& h) {
  const auto d = oracle::floyd_warshall(g.num_vertices(), oracle::arcs_without(g));
  std::size_t bad = 0;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    for (std::size_t t = 0; t < g.num_vertices(); ++t) {
      const Length dst = d[s][t];
      if (dst.is_infinite()) continue;
      for (const auto& level : h.levels) {
        const double x = static_cast<double>(dst.value());
        if (!(x > level.r_lo && x <= level.r_hi)) continue;
        const bool hit = std::any_of(level.pivots.begin(), level.pivots.end(), [&](Vertex z) {
          return d[s][static_cast<std::size_t>(z)] + d[static_cast<std::size_t>(z)][t] == dst;
        });
        if (!hit) ++bad;
      }
    }
  }
  return bad;
}

}  // namespace

TEST(Hdph, TopLevel) {
  EXPECT_EQ(hdph_top_level(4, 2), 2);
  EXPECT_EQ(hdph_top_level(40, 2), 6);
  EXPECT_EQ(hdph_top_level(64, 2), 6);
  EXPECT_EQ(hdph_top_level(65, 2), 7);
}

TEST(Hdph, SmallGraphIsAllV) {
  const Graph g = directed_cycle(4);
  const auto h = build(g, {});
  ASSERT_EQ(h.levels.size(), 3u);
  for (const auto& l : h.levels) EXPECT_EQ(l.pivots, all(4));
}

TEST(Hdph, RejectsBadInput) {
  const Graph g = directed_cycle(6);
  HdphOptions o;
  o.C = 1.4;
  EXPECT_THROW(build(g, o), Error);
  const Graph w(3, {{0, 1, 2}, {1, 2, 1}, {2, 0, 1}});
  EXPECT_THROW(build(w, {}), Error);
}

TEST(Hdph, LevelOf) {
  PivotHierarchy h;
  h.C = 2;
  for (int i = 0; i <= 4; ++i) h.levels.push_back({i, std::pow(2.0, i), std::pow(2.0, i + 1), {}, 0, 0});
  EXPECT_FALSE(h.level_of(Length(1)).has_value());
  EXPECT_EQ(h.level_of(Length(2)), 0);
  EXPECT_EQ(h.level_of(Length(3)), 1);
  EXPECT_EQ(h.level_of(Length(4)), 1);
  EXPECT_EQ(h.level_of(Length(5)), 2);
  EXPECT_EQ(h.level_of(Length(100)), 4);
}

class HdphWindows : public ::testing::TestWithParam<PathWindow> {};

TEST_P(HdphWindows, RandomGraphsSatisfyHitting) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Graph g = random_strongly_connected(30, 75, seed);
    HdphOptions o;
    o.window = GetParam();
    const auto h = build(g, o);
    const auto report = verify_hierarchy(g, h);
    EXPECT_TRUE(report.ok()) << report.num_violations << " violations, seed " << seed;
    EXPECT_GT(report.num_checked, 0u);
    EXPECT_EQ(failure_free_violations(g, h), 0u);
  }
}

TEST_P(HdphWindows, LongCyclesExerciseUpperLevels) {
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    const Graph g = cycle_with_chords(48, 4, seed);
    HdphOptions o;
    o.window = GetParam();
    o.include_vertex_failures = true;
    const auto h = build(g, o);
    ASSERT_GE(h.levels.size(), 6u);
    // The verbatim lower end C^(i-6) is below 1 here, so only the tight window shrinks.
    if (GetParam() == PathWindow::kTight) EXPECT_LT(h.levels[4].pivots.size(), 48u);
    const auto report = verify_hierarchy(g, h);
    EXPECT_TRUE(report.ok()) << report.num_violations << " violations, seed " << seed;
    EXPECT_EQ(failure_free_violations(g, h), 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Windows, HdphWindows, ::testing::Values(PathWindow::kVerbatim, PathWindow::kTight),
                         [](const auto& info) { return info.param == PathWindow::kTight ? "Tight" : "Verbatim"; });

TEST(Hdph, VertexFailuresCovered) {
  const Graph g = random_strongly_connected(20, 45, 8);
  HdphOptions o;
  o.include_vertex_failures = true;
  const auto h = build(g, o);
  EXPECT_TRUE(h.vertex_failures);
  EXPECT_TRUE(verify_hierarchy(g, h).ok());
}

TEST(Hdph, SabotageIsDetected) {
  const Graph g = cycle_with_chords(40, 3, 1);
  auto h = build(g, {});
  // Empty every level that holds some distance.
  for (auto& l : h.levels) l.pivots.clear();
  const auto report = verify_hierarchy(g, h);
  EXPECT_FALSE(report.ok());
  EXPECT_LE(report.violations.size(), 100u);
  EXPECT_GE(report.num_violations, report.violations.size());
}

TEST(Hdph, AllVIsTriviallyCorrect) {
  const Graph g = cycle_with_chords(30, 4, 2);
  auto h = build(g, {});
  for (auto& l : h.levels) l.pivots = all(30);
  EXPECT_TRUE(verify_hierarchy(g, h).ok());
}

TEST(Hdph, Deterministic) {
  const Graph g = cycle_with_chords(40, 5, 3);
  HdphOptions o;
  o.include_vertex_failures = true;
  EXPECT_EQ(hierarchy_to_json(build(g, o)).dump(), hierarchy_to_json(build(g, o)).dump());
}
