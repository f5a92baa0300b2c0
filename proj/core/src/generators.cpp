#include "ftoracle/generators.hpp"

#include <algorithm>
#include <set>

#include "ftoracle/shortest_paths.hpp"

namespace fto {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below: empty range");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error("Rng::between: empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.tail, a.head) < std::pair(b.tail, b.head); });
  return edges;
}

}  // namespace

Graph random_digraph(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight) {
  if (n < 1) throw Error("random_digraph: n must be positive");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  if (m > pairs) throw Error("random_digraph: m exceeds n(n-1)");
  if (max_weight < 1) throw Error("random_digraph: weight bound below 1");

  Rng rng(seed);
  std::set<std::uint64_t> chosen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const std::uint64_t k = rng.below(pairs);
    if (!chosen.insert(k).second) continue;
    const auto tail = static_cast<Vertex>(k / (n - 1));
    auto head = static_cast<Vertex>(k % (n - 1));
    if (head >= tail) ++head;
    edges.push_back({tail, head, 1});
  }
  edges = sorted_edges(std::move(edges));
  for (Edge& e : edges) e.weight = rng.between(1, max_weight);
  return Graph(n, std::move(edges));
}

Graph random_strongly_connected(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight) {
  if (n > 1 && m < n) throw Error("random_strongly_connected: need m >= n");
  Rng seeds(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g = random_digraph(n, m, seeds.next(), max_weight);
    if (is_strongly_connected(g)) return g;
  }
  throw Error("random_strongly_connected: no strongly connected sample found");
}

Graph random_reachable_digraph(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight) {
  if (n < 1) throw Error("random_reachable_digraph: n must be positive");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  if (m + 1 < n || m > pairs) throw Error("random_reachable_digraph: need n-1 <= m <= n(n-1)");

  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  std::vector<Vertex> rest(order.begin() + 1, order.end());
  rng.shuffle(rest);
  std::copy(rest.begin(), rest.end(), order.begin() + 1);
  std::set<std::pair<Vertex, Vertex>> chosen;
  for (std::size_t i = 1; i < n; ++i) chosen.emplace(order[rng.below(i)], order[i]);
  while (chosen.size() < m) {
    const auto a = static_cast<Vertex>(rng.below(n));
    const auto b = static_cast<Vertex>(rng.below(n));
    if (a != b) chosen.emplace(a, b);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : chosen) edges.push_back({a, b, static_cast<Weight>(rng.between(1, max_weight))});
  return Graph(n, std::move(edges));
}

Graph random_dag(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight) {
  if (n < 1) throw Error("random_dag: n must be positive");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m + 1 < n || m > pairs) throw Error("random_dag: need n-1 <= m <= n(n-1)/2");

  Rng rng(seed);
  std::set<std::pair<Vertex, Vertex>> chosen;
  for (std::size_t v = 1; v < n; ++v) {
    chosen.emplace(static_cast<Vertex>(rng.below(v)), static_cast<Vertex>(v));
  }
  while (chosen.size() < m) {
    auto a = static_cast<Vertex>(rng.below(n));
    auto b = static_cast<Vertex>(rng.below(n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    chosen.emplace(a, b);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (auto [a, b] : chosen) edges.push_back({a, b, rng.between(1, max_weight)});
  return Graph(n, std::move(edges));
}

Graph cycle_with_chords(std::size_t n, std::size_t chords, std::uint64_t seed) {
  if (n < 2) throw Error("cycle_with_chords: need n >= 2");
  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  rng.shuffle(order);

  std::set<std::pair<Vertex, Vertex>> chosen;
  for (std::size_t i = 0; i < n; ++i) chosen.emplace(order[i], order[(i + 1) % n]);
  const std::size_t target = std::min<std::size_t>(chosen.size() + chords, n * (n - 1));
  while (chosen.size() < target) {
    const auto a = static_cast<Vertex>(rng.below(n));
    const auto b = static_cast<Vertex>(rng.below(n));
    if (a != b) chosen.emplace(a, b);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : chosen) edges.push_back({a, b, 1});
  return Graph(n, std::move(edges));
}

Graph directed_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 1});
  }
  return Graph(n, std::move(edges));
}

}  // namespace fto
