#include "ftoracle/shortest_paths.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

namespace fto {

bool EdgeMask::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t EdgeMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<EdgeId> EdgeMask::ids() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (unsigned b = 0; b < 64; ++b) {
      if (words_[i] & (std::uint64_t{1} << (63 - b))) out.push_back(static_cast<EdgeId>(i * 64 + b));
    }
  }
  return out;
}

EdgeMask& EdgeMask::operator|=(const EdgeMask& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const EdgeMask& a, const EdgeMask& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

Path concat(const Path& p, const Path& q) {
  if (p.vertices.empty()) return q;
  if (q.vertices.empty()) return p;
  if (p.target() != q.source()) throw Error("concat: paths do not meet");
  Path r = p;
  r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  r.length = p.length + q.length;
  return r;
}

bool is_valid_path(const Graph& g, const Path& p, std::span<const EdgeId> banned) {
  if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size()) return false;
  std::set<Vertex> seen;
  for (Vertex v : p.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) return false;
    if (!seen.insert(v).second) return false;
  }
  Weight total = 0;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) return false;
    if (std::find(banned.begin(), banned.end(), e) != banned.end()) return false;
    if (g.edge(e).tail != p.vertices[i] || g.edge(e).head != p.vertices[i + 1]) return false;
    total += g.edge(e).weight;
  }
  return p.length == Length(total);
}

std::vector<char> ban_table(const Graph& g, std::span<const EdgeId> banned) {
  std::vector<char> ban(g.num_edges(), 0);
  for (EdgeId e : banned) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) throw Error("edge id out of range: " + std::to_string(e));
    ban[static_cast<std::size_t>(e)] = 1;
  }
  return ban;
}

Vertex ShortestPathTree::parent(const Graph& g, Vertex t) const {
  const EdgeId e = parent_edge(t);
  return e == kNoEdge ? kNoVertex : g.edge(e).tail;
}

std::optional<Path> ShortestPathTree::path_to(const Graph& g, Vertex t) const {
  if (!reachable(t)) return std::nullopt;
  Path p;
  p.length = distance(t);
  for (Vertex v = t;;) {
    p.vertices.push_back(v);
    const EdgeId e = parent_edge(v);
    if (e == kNoEdge) break;
    p.edges.push_back(e);
    v = g.edge(e).tail;
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

ShortestPathTree sssp(const Graph& g, Vertex s, const std::vector<char>& ban, Length bound) {
  const std::size_t n = g.num_vertices();
  if (s < 0 || static_cast<std::size_t>(s) >= n) throw Error("source out of range");
  std::vector<PerturbedDist> dist(n, PerturbedDist::infinity());
  std::vector<EdgeId> parent(n, kNoEdge);
  std::vector<char> done(n, 0);

  // Keys are copied into the heap; stale entries are skipped on pop.
  using Item = std::pair<PerturbedDist, Vertex>;
  auto greater = [](const Item& a, const Item& b) {
    if (auto c = a.first <=> b.first; c != 0) return c > 0;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> heap(greater);

  dist[static_cast<std::size_t>(s)] = PerturbedDist::zero(g.num_edges());
  heap.emplace(dist[static_cast<std::size_t>(s)], s);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    const auto ui = static_cast<std::size_t>(u);
    if (done[ui] || d != dist[ui]) continue;
    done[ui] = 1;
    for (EdgeId e : g.out_edges(u)) {
      if (ban[static_cast<std::size_t>(e)]) continue;
      const Edge& edge = g.edge(e);
      const auto vi = static_cast<std::size_t>(edge.head);
      if (done[vi]) continue;
      PerturbedDist cand = d.plus_edge(e, edge.weight);
      if (cand.base > bound) continue;
      if (cand < dist[vi]) {
        dist[vi] = cand;
        parent[vi] = e;
        heap.emplace(std::move(cand), edge.head);
      }
    }
  }
  return ShortestPathTree(s, std::move(dist), std::move(parent));
}

ShortestPathTree sssp(const Graph& g, Vertex s, std::span<const EdgeId> banned, Length bound) {
  return sssp(g, s, ban_table(g, banned), bound);
}

ApspData::ApspData(const Graph& g) : graph_(&g) {
  trees_.reserve(g.num_vertices());
  const std::vector<char> ban(g.num_edges(), 0);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) trees_.push_back(sssp(g, static_cast<Vertex>(s), ban));
}

Vertex ApspData::pred(Vertex s, Vertex t) const { return tree(s).parent(*graph_, t); }

ApspData apsp(const Graph& g) { return ApspData(g); }

std::optional<Path> replacement_path(const Graph& g, Vertex s, Vertex t, std::span<const EdgeId> failed) {
  return sssp(g, s, failed).path_to(g, t);
}

Length replacement_distance(const Graph& g, Vertex s, Vertex t, std::span<const EdgeId> failed) {
  return distances_from(g, s, failed)[static_cast<std::size_t>(t)];
}

std::vector<Length> distances_from(const Graph& g, Vertex s, const std::vector<char>& ban) {
  const std::size_t n = g.num_vertices();
  std::vector<Length> dist(n, Length::infinity());
  dist[static_cast<std::size_t>(s)] = Length(0);

  if (g.is_unweighted()) {
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const Length du = dist[static_cast<std::size_t>(u)];
      for (EdgeId e : g.out_edges(u)) {
        if (ban[static_cast<std::size_t>(e)]) continue;
        const Vertex v = g.edge(e).head;
        if (dist[static_cast<std::size_t>(v)].is_infinite()) {
          dist[static_cast<std::size_t>(v)] = du + Length(1);
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, s);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (Length(d) != dist[static_cast<std::size_t>(u)]) continue;
    for (EdgeId e : g.out_edges(u)) {
      if (ban[static_cast<std::size_t>(e)]) continue;
      const Edge& edge = g.edge(e);
      const Length cand(d + edge.weight);
      if (cand < dist[static_cast<std::size_t>(edge.head)]) {
        dist[static_cast<std::size_t>(edge.head)] = cand;
        heap.emplace(d + edge.weight, edge.head);
      }
    }
  }
  return dist;
}

std::vector<Length> distances_from(const Graph& g, Vertex s, std::span<const EdgeId> banned) {
  return distances_from(g, s, ban_table(g, banned));
}

std::vector<std::vector<Length>> distance_matrix(const Graph& g, std::span<const EdgeId> banned) {
  const auto ban = ban_table(g, banned);
  std::vector<std::vector<Length>> d;
  d.reserve(g.num_vertices());
  for (std::size_t s = 0; s < g.num_vertices(); ++s) d.push_back(distances_from(g, static_cast<Vertex>(s), ban));
  return d;
}

namespace {

Length max_of(const std::vector<Length>& dist, Vertex skip) {
  Length worst(0);
  for (std::size_t t = 0; t < dist.size(); ++t) {
    if (static_cast<Vertex>(t) == skip) continue;
    worst = std::max(worst, dist[t]);
  }
  return worst;
}

}  // namespace

Length eccentricity(const Graph& g, Vertex s, std::span<const EdgeId> failed) {
  return max_of(distances_from(g, s, failed), kNoVertex);
}

Length diameter(const Graph& g, std::span<const EdgeId> failed) {
  const auto ban = ban_table(g, failed);
  Length worst(0);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    worst = std::max(worst, max_of(distances_from(g, static_cast<Vertex>(s), ban), kNoVertex));
    if (worst.is_infinite()) break;
  }
  return worst;
}

std::vector<Length> distances_from(const Graph& g, Vertex s, const Failure& f) {
  if (f.is_vertex() && f.id == s) return std::vector<Length>(g.num_vertices(), Length::infinity());
  auto dist = distances_from(g, s, f.banned_edges(g));
  if (f.is_vertex()) dist[static_cast<std::size_t>(f.id)] = Length::infinity();
  return dist;
}

Length eccentricity(const Graph& g, Vertex s, const Failure& f) {
  if (f.is_vertex() && f.id == s) throw Error("eccentricity of a failed vertex");
  return max_of(distances_from(g, s, f.banned_edges(g)), f.is_vertex() ? f.id : kNoVertex);
}

Length diameter(const Graph& g, const Failure& f) {
  const auto ban = ban_table(g, f.banned_edges(g));
  const Vertex skip = f.is_vertex() ? f.id : kNoVertex;
  Length worst(0);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (static_cast<Vertex>(s) == skip) continue;
    worst = std::max(worst, max_of(distances_from(g, static_cast<Vertex>(s), ban), skip));
    if (worst.is_infinite()) break;
  }
  return worst;
}

namespace {

std::size_t reach_count(const Graph& g, const std::vector<char>& ban, bool forward) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (EdgeId e : forward ? g.out_edges(u) : g.in_edges(u)) {
      if (ban[static_cast<std::size_t>(e)]) continue;
      const Vertex v = forward ? g.edge(e).head : g.edge(e).tail;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Graph& g, const std::vector<char>& ban) {
  if (g.num_vertices() <= 1) return true;
  return reach_count(g, ban, true) == g.num_vertices() && reach_count(g, ban, false) == g.num_vertices();
}

bool is_strongly_connected(const Graph& g, std::span<const EdgeId> banned) {
  return is_strongly_connected(g, ban_table(g, banned));
}

std::vector<EdgeId> strong_bridges(const Graph& g) {
  std::vector<char> ban(g.num_edges(), 0);
  if (!is_strongly_connected(g, ban)) throw Error("strong_bridges: graph is not strongly connected");
  std::vector<EdgeId> bridges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ban[e] = 1;
    if (!is_strongly_connected(g, ban)) bridges.push_back(static_cast<EdgeId>(e));
    ban[e] = 0;
  }
  return bridges;
}

}  // namespace fto
