#include <gtest/gtest.h>

#include <set>

#include "ftoracle/generators.hpp"
#include "ftoracle/greedy.hpp"
#include "ftoracle/length.hpp"

using namespace fto;

namespace {

bool hits_prefix(const std::vector<Vertex>& path, std::size_t L, const std::set<Vertex>& B) {
  std::set<Vertex> seen;
  for (Vertex v : path) {
    if (seen.size() == L) break;
    if (!seen.insert(v).second) continue;
    if (B.count(v)) return true;
  }
  return false;
}

}  // namespace

TEST(Greedy, EmptyFamily) { EXPECT_TRUE(greedy_pivot_selection({}, 3).empty()); }

TEST(Greedy, PicksTheSharedVertex) {
  const std::vector<std::vector<Vertex>> paths{{1, 2, 3}, {4, 2, 5}, {6, 2, 7}};
  EXPECT_EQ(greedy_pivot_selection(paths, 3), std::vector<Vertex>{2});
}

TEST(Greedy, TiesGoToSmallestId) {
  const std::vector<std::vector<Vertex>> paths{{5, 3}, {5, 3}};
  EXPECT_EQ(greedy_pivot_selection(paths, 2), std::vector<Vertex>{3});
}

TEST(Greedy, OnlyThePrefixCounts) {
  // With L = 2 the shared vertex 9 sits past the prefix of both paths.
  const std::vector<std::vector<Vertex>> paths{{1, 2, 9}, {3, 4, 9}};
  const auto B = greedy_pivot_selection(paths, 2);
  EXPECT_EQ(B.size(), 2u);
  EXPECT_EQ(std::count(B.begin(), B.end(), 9), 0);
}

TEST(Greedy, ShortPathThrows) { EXPECT_THROW(greedy_pivot_selection({{1, 2}}, 3), Error); }

TEST(Greedy, SizeBound) {
  EXPECT_EQ(greedy_size_bound(256, 8, 0), 0u);
  EXPECT_EQ(greedy_size_bound(100, 10, 1), 10u);
}

TEST(Greedy, RandomFamiliesCoveredWithinBound) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 128;
    const std::size_t L = std::size_t{4} << rng.below(3);
    const std::size_t q = 1 + rng.below(300);
    std::vector<Vertex> universe(n);
    for (std::size_t i = 0; i < n; ++i) universe[i] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> paths;
    for (std::size_t p = 0; p < q; ++p) {
      rng.shuffle(universe);
      paths.emplace_back(universe.begin(), universe.begin() + static_cast<std::ptrdiff_t>(L + rng.below(L)));
    }
    const auto B = greedy_pivot_selection(paths, L);
    EXPECT_TRUE(std::is_sorted(B.begin(), B.end()));
    const std::set<Vertex> set(B.begin(), B.end());
    for (const auto& p : paths) EXPECT_TRUE(hits_prefix(p, L, set));
    EXPECT_LE(B.size(), greedy_size_bound(n, L, q));
  }
}
