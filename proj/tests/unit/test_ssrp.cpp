#include <gtest/gtest.h>

#include <set>

#include "ftoracle/generators.hpp"
#include "ftoracle/ssrp_hitting.hpp"
#include "oracles.hpp"

using namespace fto;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1), 1});
  return Graph(n, edges);
}

void expect_balanced(const SsrpContext& ctx) {
  const double n = static_cast<double>(ctx.n());
  for (const auto* side : {&ctx.S, &ctx.T}) {
    EXPECT_GE(static_cast<double>(side->size()), n / 3.0);
    EXPECT_LE(static_cast<double>(side->size()), 2.0 * n / 3.0);
  }
  EXPECT_EQ(ctx.S.size() + ctx.T.size(), ctx.n() + 1);
  EXPECT_EQ(ctx.path.front(), ctx.source);
  EXPECT_EQ(ctx.path.back(), ctx.separator);
}

// Second implementation of the relevance test: explicit double loop with
// Bellman-Ford distances in G_P.
std::vector<std::pair<Vertex, Vertex>> relevant_brute(const SsrpContext& ctx, std::size_t k) {
  const auto arcs = oracle::arcs_without(ctx.graph, ctx.path_edges);
  std::vector<std::vector<Length>> d;
  for (Vertex u : ctx.path) d.push_back(oracle::bellman_ford(ctx.n(), arcs, u));
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < ctx.path.size(); ++i) {
    for (Vertex v : ctx.T) {
      const Length duv = d[i][static_cast<std::size_t>(v)];
      if (duv.is_infinite() || duv <= Length(std::int64_t{1} << (k + 1))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) ok &= d[j][static_cast<std::size_t>(v)] > duv;
      if (ok) out.emplace_back(ctx.path[i], v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(SsrpContext, PathGraph) {
  const auto ctx = make_context(path_graph(9), 0);
  expect_balanced(ctx);
  EXPECT_GE(ctx.separator, 3);
  EXPECT_LE(ctx.separator, 5);
}

TEST(SsrpContext, Star) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < 10; ++v) edges.push_back({0, v, 1});
  const auto ctx = make_context(Graph(10, edges), 0);
  EXPECT_EQ(ctx.separator, 0);
  EXPECT_EQ(ctx.path, std::vector<Vertex>{0});
  expect_balanced(ctx);
}

TEST(SsrpContext, SmallestCaseAndErrors) {
  expect_balanced(make_context(path_graph(3), 0));
  EXPECT_THROW(make_context(path_graph(4), 0), Error);  // no split with both sides in [4/3, 8/3]
  EXPECT_THROW(make_context(path_graph(5), 2), Error);
  EXPECT_THROW(make_context(Graph(3, {{0, 1, 2}, {1, 2, 1}}), 0), Error);
}

TEST(SsrpContext, RandomGraphsBalanced) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) expect_balanced(make_context(random_reachable_digraph(40, 80, seed), 0));
}

TEST(EpsDist, LexicographicEqualsNumeric) {
  // With eps = 1/(n+1) and fewer than n edges, unit + eps/(n+1) orders like the pair.
  const std::int64_t n = 20;
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const EpsDist a{static_cast<std::int64_t>(rng.below(6)), static_cast<std::int64_t>(rng.below(n))};
    const EpsDist b{static_cast<std::int64_t>(rng.below(6)), static_cast<std::int64_t>(rng.below(n))};
    const std::int64_t va = a.unit * (n + 1) + a.eps;
    const std::int64_t vb = b.unit * (n + 1) + b.eps;
    EXPECT_EQ(a < b, va < vb);
    EXPECT_EQ(a == b, va == vb);
  }
  EXPECT_TRUE(EpsDist::infinity().is_infinite());
  EXPECT_LT((EpsDist{1000, 0}), EpsDist::infinity());
}

TEST(RelevantPairs, MatchesDoubleLoop) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto ctx = make_context(random_reachable_digraph(30, 60, seed), 0);
    for (std::size_t k = 0; k <= ssrp_top_level(30); ++k) EXPECT_EQ(k_relevant_pairs(ctx, k), relevant_brute(ctx, k));
  }
  const auto ctx = make_context(random_reachable_digraph(30, 60, 1), 0);
  EXPECT_TRUE(k_relevant_pairs(ctx, 4).empty());  // 2^5 >= 30
}

TEST(RelevantPairs, StrictInequality) {
  // s=0 -> 1 -> 2 = t on P; 0 -> 3 and 1 -> 3 tie at d = 1, then 3 -> 4 -> ... -> 8.
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}};
  for (Vertex v = 3; v < 8; ++v) edges.push_back({v, v + 1, 1});
  edges.push_back({2, 9, 1});
  edges.push_back({9, 10, 1});
  const auto ctx = make_context(Graph(11, edges), 0);
  for (const auto& [u, v] : k_relevant_pairs(ctx, 0)) {
    // The later tied vertex 1 never qualifies for targets behind 3.
    if (v >= 3 && v <= 8) EXPECT_NE(u, 1);
  }
}

TEST(B0, PathsAreHit) {
  const auto ctx = make_context(random_reachable_digraph(36, 72, 2), 0);
  const auto levels = compute_b0(ctx, 2);
  for (std::size_t k = 0; k <= 2; ++k) {
    const std::set<Vertex> B(levels[k].begin(), levels[k].end());
    for (const auto& p : b0_paths(ctx, k)) {
      EXPECT_EQ(p.size(), (std::size_t{1} << k) + 1);
      EXPECT_TRUE(std::any_of(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(std::size_t{1} << k),
                              [&](Vertex v) { return B.count(v) > 0; }));
    }
  }
}

TEST(B0, EmptyWindow) {
  // Star: every vertex is at distance 1, so the k = 1 window [2, 3] is empty.
  std::vector<Edge> edges;
  for (Vertex v = 1; v < 10; ++v) edges.push_back({0, v, 1});
  const auto ctx = make_context(Graph(10, edges), 0);
  EXPECT_TRUE(b0_paths(ctx, 1).empty());
  EXPECT_TRUE(compute_b0(ctx, 1)[1].empty());
  EXPECT_FALSE(b0_paths(ctx, 0).empty());
}

TEST(Bk, EmptyPrev) {
  const auto ctx = make_context(random_reachable_digraph(30, 60, 1), 0);
  EXPECT_TRUE(compute_bk(ctx, {}, 3).empty());
}

TEST(Chain, VerifiesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto ctx = make_context(random_reachable_digraph(40, 80, seed), 0);
    const auto levels = ssrp_hitting_chain(ctx);
    ASSERT_EQ(levels.size(), ssrp_top_level(40) + 1);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const auto report = verify_ssrp_hitting(ctx, levels[k], k);
      EXPECT_TRUE(report.ok()) << "seed " << seed << " level " << k << ": " << report.num_violations << " of "
                               << report.num_pairs;
    }
  }
}

TEST(Chain, SabotageAndVacuous) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ctx = make_context(random_reachable_digraph(40, 70, seed), 0);
    if (k_relevant_pairs(ctx, 0).empty()) continue;
    EXPECT_FALSE(verify_ssrp_hitting(ctx, {}, 0).ok());
    break;
  }
  const auto ctx = make_context(random_reachable_digraph(30, 60, 1), 0);
  const auto report = verify_ssrp_hitting(ctx, {}, 4);
  EXPECT_EQ(report.num_pairs, 0u);
  EXPECT_TRUE(report.ok());
}
