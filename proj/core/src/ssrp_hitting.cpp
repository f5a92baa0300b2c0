#include "ftoracle/ssrp_hitting.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <queue>
#include <optional>

#include "ftoracle/greedy.hpp"
#include "ftoracle/shortest_paths.hpp"

namespace fto {

namespace {

std::int64_t pow2(std::size_t k) { return std::int64_t{1} << k; }

// Subset of child sizes with sum in [lo, hi], or nullopt.
std::optional<std::vector<std::size_t>> pick_children(const std::vector<std::size_t>& sizes, std::size_t lo,
                                                      std::size_t hi) {
  if (lo > hi) return std::nullopt;
  // reach[x] = index of the item that first made sum x reachable, or -1.
  std::vector<int> reach(hi + 1, -1);
  std::vector<std::size_t> from(hi + 1, 0);
  std::vector<char> ok(hi + 1, 0);
  ok[0] = 1;
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const std::size_t w = sizes[idx];
    if (w == 0) continue;
    for (std::size_t x = hi + 1; x-- > w;) {
      if (!ok[x] && ok[x - w]) {
        ok[x] = 1;
        reach[x] = static_cast<int>(idx);
        from[x] = x - w;
      }
    }
  }
  for (std::size_t x = lo; x <= hi; ++x) {
    if (!ok[x]) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t y = x; y > 0; y = from[y]) chosen.push_back(static_cast<std::size_t>(reach[y]));
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> dedup(std::vector<std::vector<Vertex>> paths) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return paths;
}

}  // namespace

std::size_t ssrp_top_level(std::size_t n) { return n < 2 ? 0 : static_cast<std::size_t>(std::bit_width(n) - 1); }
std::size_t ssrp_b0_levels(std::size_t n) { return ssrp_top_level(n) / 2; }

SsrpContext make_context(const Graph& g, Vertex s) {
  const std::size_t n = g.num_vertices();
  if (!g.is_unweighted() && g.num_edges() > 0) throw Error("ssrp: graph must be unweighted");
  if (s < 0 || static_cast<std::size_t>(s) >= n) throw Error("ssrp: source out of range");

  SsrpContext ctx;
  ctx.graph = g;
  ctx.source = s;

  // BFS with the smallest-id parent among all predecessors at the previous layer.
  std::vector<std::int64_t> depth(n, -1);
  ctx.parent_edge.assign(n, kNoEdge);
  depth[static_cast<std::size_t>(s)] = 0;
  std::vector<Vertex> order{s};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (EdgeId e : g.out_edges(u)) {
      const auto v = static_cast<std::size_t>(g.edge(e).head);
      if (depth[v] < 0) {
        depth[v] = depth[static_cast<std::size_t>(u)] + 1;
        order.push_back(static_cast<Vertex>(v));
      }
    }
  }
  if (order.size() != n) throw Error("ssrp: some vertex is unreachable from the source");
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<Vertex>(v) == s) continue;
    for (EdgeId e : g.in_edges(static_cast<Vertex>(v))) {
      const Vertex u = g.edge(e).tail;
      if (depth[static_cast<std::size_t>(u)] + 1 != depth[v]) continue;
      if (ctx.parent_edge[v] == kNoEdge || u < g.edge(ctx.parent_edge[v]).tail) ctx.parent_edge[v] = e;
    }
  }

  std::vector<std::vector<Vertex>> children(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (ctx.parent_edge[v] != kNoEdge) children[static_cast<std::size_t>(g.edge(ctx.parent_edge[v]).tail)].push_back(static_cast<Vertex>(v));
  }
  ctx.subtree_size.assign(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    if (ctx.parent_edge[v] != kNoEdge) ctx.subtree_size[static_cast<std::size_t>(g.edge(ctx.parent_edge[v]).tail)] += ctx.subtree_size[v];
  }

  // sigma = total size of the child subtrees moved into T; |T| = sigma + 1,
  // |S| = n - sigma.
  const std::size_t lo = (n + 2) / 3;
  const std::size_t hi = (2 * n) / 3 >= 1 ? (2 * n) / 3 - 1 : 0;
  auto try_vertex = [&](Vertex t) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> sizes;
    for (Vertex c : children[static_cast<std::size_t>(t)]) sizes.push_back(ctx.subtree_size[static_cast<std::size_t>(c)]);
    return pick_children(sizes, lo, hi);
  };

  // Walk down while a child subtree is too large on its own, then fall back
  // to every vertex in BFS order.
  std::vector<Vertex> candidates;
  Vertex walk = s;
  for (;;) {
    candidates.push_back(walk);
    Vertex next = kNoVertex;
    for (Vertex c : children[static_cast<std::size_t>(walk)]) {
      if (ctx.subtree_size[static_cast<std::size_t>(c)] > hi) next = c;
    }
    if (next == kNoVertex) break;
    walk = next;
  }
  std::reverse(candidates.begin(), candidates.end());
  candidates.insert(candidates.end(), order.begin(), order.end());

  std::optional<std::vector<std::size_t>> chosen;
  Vertex t = kNoVertex;
  for (Vertex c : candidates) {
    chosen = try_vertex(c);
    if (chosen) {
      t = c;
      break;
    }
  }
  if (!chosen) throw Error("ssrp: no balanced separator for n = " + std::to_string(n));
  ctx.separator = t;

  std::vector<char> in_t(n, 0);
  in_t[static_cast<std::size_t>(t)] = 1;
  std::vector<Vertex> stack;
  for (std::size_t idx : *chosen) stack.push_back(children[static_cast<std::size_t>(t)][idx]);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    in_t[static_cast<std::size_t>(v)] = 1;
    for (Vertex c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_t[v]) ctx.T.push_back(static_cast<Vertex>(v));
    if (!in_t[v] || static_cast<Vertex>(v) == t) ctx.S.push_back(static_cast<Vertex>(v));
  }

  for (Vertex v = t; v != s; v = g.edge(ctx.parent_edge[static_cast<std::size_t>(v)]).tail) {
    ctx.path.push_back(v);
    ctx.path_edges.push_back(ctx.parent_edge[static_cast<std::size_t>(v)]);
  }
  ctx.path.push_back(s);
  std::reverse(ctx.path.begin(), ctx.path.end());
  std::reverse(ctx.path_edges.begin(), ctx.path_edges.end());
  ctx.gp_ban = ban_table(g, ctx.path_edges);
  ctx.gp_dist = distance_matrix(g, ctx.path_edges);
  return ctx;
}

std::vector<std::pair<Vertex, Vertex>> k_relevant_pairs(const SsrpContext& ctx, std::size_t k) {
  const Length threshold(pow2(k + 1));
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v : ctx.T) {
    // Running minimum of d(u', v) over the prefix of P.
    Length best = Length::infinity();
    for (Vertex u : ctx.path) {
      const Length d = ctx.gp_dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (d < best) {
        if (d.is_finite() && d > threshold) out.emplace_back(u, v);
        best = d;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> b0_paths(const SsrpContext& ctx, std::size_t k) {
  const Graph& g = ctx.graph;
  const std::size_t n = g.num_vertices();
  const std::int64_t lo = pow2(k);
  std::vector<char> on_path_edge(g.num_edges(), 0);
  for (EdgeId e : ctx.path_edges) on_path_edge[static_cast<std::size_t>(e)] = 1;

  std::vector<std::vector<Vertex>> paths;
  std::vector<char> removed(n, 0);
  std::vector<EpsDist> dist(n);
  std::vector<EdgeId> parent(n);
  using Item = std::pair<EpsDist, Vertex>;
  for (std::size_t i = ctx.path.size(); i-- > 0;) {
    if (i + 1 < ctx.path.size()) removed[static_cast<std::size_t>(ctx.path[i + 1])] = 1;

    std::fill(dist.begin(), dist.end(), EpsDist::infinity());
    std::fill(parent.begin(), parent.end(), kNoEdge);
    dist[static_cast<std::size_t>(ctx.source)] = {0, 0};
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({{0, 0}, ctx.source});
    while (!pq.empty()) {
      const auto [d, u] = pq.top();
      pq.pop();
      if (d != dist[static_cast<std::size_t>(u)]) continue;
      for (EdgeId e : g.out_edges(u)) {
        const auto v = static_cast<std::size_t>(g.edge(e).head);
        if (removed[v]) continue;
        EpsDist nd = d;
        if (on_path_edge[static_cast<std::size_t>(e)]) {
          ++nd.eps;
        } else {
          ++nd.unit;
        }
        if (nd.unit > lo + 1) continue;
        if (nd < dist[v]) {
          dist[v] = nd;
          parent[v] = e;
          pq.push({nd, static_cast<Vertex>(v)});
        }
      }
    }

    for (std::size_t v = 0; v < n; ++v) {
      const EpsDist d = dist[v];
      const bool in_window = d.unit == lo || (d.unit == lo + 1 && d.eps == 0);
      if (!in_window) continue;
      std::vector<Vertex> tail{static_cast<Vertex>(v)};
      Vertex x = static_cast<Vertex>(v);
      for (std::int64_t step = 0; step < lo; ++step) {
        x = g.edge(parent[static_cast<std::size_t>(x)]).tail;
        tail.push_back(x);
      }
      std::reverse(tail.begin(), tail.end());
      paths.push_back(std::move(tail));
    }
  }
  return dedup(std::move(paths));
}

std::vector<std::vector<Vertex>> compute_b0(const SsrpContext& ctx, std::size_t k_max) {
  std::vector<std::vector<Vertex>> levels;
  for (std::size_t k = 0; k <= k_max; ++k) {
    levels.push_back(greedy_pivot_selection(b0_paths(ctx, k), static_cast<std::size_t>(pow2(k))));
  }
  return levels;
}

std::vector<std::vector<Vertex>> bk_paths(const SsrpContext& ctx, const std::vector<Vertex>& prev, std::size_t k) {
  const Graph& g = ctx.graph;
  const std::size_t n = g.num_vertices();
  const std::int64_t target = pow2(k);
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::int64_t> depth(n);
  std::vector<Vertex> parent(n);
  for (Vertex u : prev) {
    std::fill(depth.begin(), depth.end(), -1);
    std::fill(parent.begin(), parent.end(), kNoVertex);
    depth[static_cast<std::size_t>(u)] = 0;
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (depth[static_cast<std::size_t>(x)] == target) continue;
      for (EdgeId e : g.out_edges(x)) {
        if (ctx.gp_ban[static_cast<std::size_t>(e)]) continue;
        const auto y = static_cast<std::size_t>(g.edge(e).head);
        if (depth[y] >= 0) continue;
        depth[y] = depth[static_cast<std::size_t>(x)] + 1;
        parent[y] = x;
        queue.push_back(static_cast<Vertex>(y));
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (depth[v] != target) continue;
      std::vector<Vertex> p;
      for (Vertex x = static_cast<Vertex>(v); x != kNoVertex; x = parent[static_cast<std::size_t>(x)]) p.push_back(x);
      std::reverse(p.begin(), p.end());
      paths.push_back(std::move(p));
    }
  }
  return dedup(std::move(paths));
}

std::vector<Vertex> compute_bk(const SsrpContext& ctx, const std::vector<Vertex>& prev, std::size_t k) {
  return greedy_pivot_selection(bk_paths(ctx, prev, k), static_cast<std::size_t>(pow2(k)));
}

std::vector<std::vector<Vertex>> ssrp_hitting_chain(const SsrpContext& ctx) {
  const std::size_t h = ssrp_b0_levels(ctx.n());
  const std::size_t top = ssrp_top_level(ctx.n());
  auto levels = compute_b0(ctx, h);
  for (std::size_t k = h + 1; k <= top; ++k) levels.push_back(compute_bk(ctx, levels.back(), k));
  return levels;
}

SsrpReport verify_ssrp_hitting(const SsrpContext& ctx, const std::vector<Vertex>& B, std::size_t k) {
  SsrpReport report;
  report.k = k;
  const Length reach(pow2(k + 1));
  for (const auto& [u, v] : k_relevant_pairs(ctx, k)) {
    ++report.num_pairs;
    const auto& du = ctx.gp_dist[static_cast<std::size_t>(u)];
    const bool hit = std::any_of(B.begin(), B.end(), [&](Vertex b) {
      const Length ub = du[static_cast<std::size_t>(b)];
      return ub <= reach && ub + ctx.gp_dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(v)] == du[static_cast<std::size_t>(v)];
    });
    if (!hit) {
      ++report.num_violations;
      if (report.violations.size() < 100) report.violations.emplace_back(u, v);
    }
  }
  return report;
}

}  // namespace fto
