#include "ftoracle/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace fto {

std::vector<Vertex> greedy_pivot_selection(const std::vector<std::vector<Vertex>>& paths, std::size_t L) {
  if (paths.empty()) return {};
  if (L == 0) throw Error("greedy_pivot_selection: L must be positive");

  std::vector<std::vector<Vertex>> sets;
  sets.reserve(paths.size());
  Vertex max_id = -1;
  for (const auto& p : paths) {
    std::vector<Vertex> s;
    for (Vertex v : p) {
      if (s.size() == L) break;
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    if (s.size() < L) throw Error("greedy_pivot_selection: path with fewer than L vertices");
    for (Vertex v : s) max_id = std::max(max_id, v);
    sets.push_back(std::move(s));
  }

  const auto universe = static_cast<std::size_t>(max_id) + 1;
  std::vector<std::vector<std::size_t>> containing(universe);
  std::vector<std::size_t> count(universe, 0);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (Vertex v : sets[k]) {
      containing[static_cast<std::size_t>(v)].push_back(k);
      ++count[static_cast<std::size_t>(v)];
    }
  }

  // Lazy max-heap on (count, -id); stale entries are refreshed on pop.
  using Item = std::pair<std::size_t, Vertex>;
  auto worse = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> heap(worse);
  for (std::size_t v = 0; v < universe; ++v) {
    if (count[v] > 0) heap.emplace(count[v], static_cast<Vertex>(v));
  }

  std::vector<char> hit(sets.size(), 0);
  std::size_t remaining = sets.size();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    auto [c, v] = heap.top();
    heap.pop();
    const auto vi = static_cast<std::size_t>(v);
    if (c != count[vi]) {
      if (count[vi] > 0) heap.emplace(count[vi], v);
      continue;
    }
    chosen.push_back(v);
    for (std::size_t k : containing[vi]) {
      if (hit[k]) continue;
      hit[k] = 1;
      --remaining;
      for (Vertex u : sets[k]) --count[static_cast<std::size_t>(u)];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::size_t greedy_size_bound(std::size_t n, std::size_t L, std::size_t q) {
  if (q == 0) return 0;
  const double bound = static_cast<double>(n) / static_cast<double>(L) * (std::log(static_cast<double>(q)) + 1.0);
  return static_cast<std::size_t>(std::ceil(bound - 1e-9));
}

}  // namespace fto
