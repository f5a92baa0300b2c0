#include "ftoracle/dag_feo.hpp"

#include <algorithm>

namespace fto {

std::vector<Vertex> topological_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> indeg(n, 0);
  for (const Edge& e : g.edges()) ++indeg[static_cast<std::size_t>(e.head)];
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (EdgeId e : g.out_edges(order[head])) {
      const auto w = static_cast<std::size_t>(g.edge(e).head);
      if (--indeg[w] == 0) order.push_back(static_cast<Vertex>(w));
    }
  }
  if (order.size() != n) throw Error("graph has a cycle");
  return order;
}

std::vector<Length> dag_reduced_weights(const Graph& g, const std::vector<Length>& dist) {
  std::vector<Length> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const Length dx = dist[static_cast<std::size_t>(e.tail)];
    const Length dy = dist[static_cast<std::size_t>(e.head)];
    if (dx.is_infinite() || dy.is_infinite()) {
      out.push_back(Length::infinity());
    } else {
      out.emplace_back(dx.value() + e.weight - dy.value());
    }
  }
  return out;
}

DagFeoOracle::DagFeoOracle(Vertex source, std::size_t f, std::size_t num_edges, std::vector<EdgeId> parent_edge,
                           std::vector<Length> dist0, std::vector<std::vector<Entry>> lists)
    : source_(source),
      f_(f),
      parent_edge_(std::move(parent_edge)),
      is_tree_(num_edges, 0),
      tree_head_(num_edges, kNoVertex),
      dist0_(std::move(dist0)),
      ecc0_(0),
      lists_(std::move(lists)) {
  for (std::size_t v = 0; v < parent_edge_.size(); ++v) {
    const EdgeId e = parent_edge_[v];
    if (e == kNoEdge) continue;
    is_tree_.at(static_cast<std::size_t>(e)) = 1;
    tree_head_[static_cast<std::size_t>(e)] = static_cast<Vertex>(v);
  }
  for (Length d : dist0_) ecc0_ = std::max(ecc0_, d);
}

std::size_t DagFeoOracle::stored_entries() const {
  std::size_t total = 0;
  for (const auto& l : lists_) total += l.size();
  return total;
}

Length DagFeoOracle::query(std::span<const EdgeId> failed, DagQueryStats* stats) const {
  std::vector<EdgeId> F(failed.begin(), failed.end());
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  if (F.size() > f_) throw Error("dag feo query: more failures than the sensitivity");

  DagQueryStats local;
  Length estimate = ecc0_;
  for (EdgeId e : F) {
    if (e < 0 || static_cast<std::size_t>(e) >= is_tree_.size()) throw Error("dag feo query: edge id out of range");
    if (!is_tree_[static_cast<std::size_t>(e)]) {
      ++local.nontree_failures;
      continue;
    }
    ++local.tree_failures;
    Length phi = Length::infinity();
    for (const Entry& entry : lists_[static_cast<std::size_t>(tree_head_[static_cast<std::size_t>(e)])]) {
      ++local.entries_scanned;
      if (!std::binary_search(F.begin(), F.end(), entry.edge)) {
        phi = Length(entry.wt_star);
        break;
      }
    }
    estimate += phi;
  }
  if (stats) *stats = local;
  return estimate;
}

DagFeoOracle build_dag_feo(const Graph& g, Vertex s, std::size_t f) {
  const std::size_t n = g.num_vertices();
  if (s < 0 || static_cast<std::size_t>(s) >= n) throw Error("dag feo: source out of range");
  const auto order = topological_order(g);

  std::vector<Length> dist(n, Length::infinity());
  std::vector<EdgeId> parent(n, kNoEdge);
  dist[static_cast<std::size_t>(s)] = Length(0);
  for (Vertex u : order) {
    const Length du = dist[static_cast<std::size_t>(u)];
    if (du.is_infinite()) continue;
    for (EdgeId e : g.out_edges(u)) {
      const Edge& edge = g.edge(e);
      const auto v = static_cast<std::size_t>(edge.head);
      const Length cand = du + Length(edge.weight);
      // Ties go to the smaller predecessor id.
      if (cand < dist[v] || (cand == dist[v] && parent[v] != kNoEdge && u < g.edge(parent[v]).tail)) {
        dist[v] = cand;
        parent[v] = e;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v].is_infinite()) throw Error("dag feo: vertex " + std::to_string(v) + " is unreachable from the source");
  }

  const auto wt = dag_reduced_weights(g, dist);
  std::vector<char> tree(g.num_edges(), 0);
  for (EdgeId e : parent) {
    if (e != kNoEdge) tree[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<std::vector<DagFeoOracle::Entry>> lists(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = lists[v];
    for (EdgeId e : g.in_edges(static_cast<Vertex>(v))) {
      if (!tree[static_cast<std::size_t>(e)]) list.push_back({e, wt[static_cast<std::size_t>(e)].value()});
    }
    auto by_weight = [](const DagFeoOracle::Entry& a, const DagFeoOracle::Entry& b) {
      return std::pair(a.wt_star, a.edge) < std::pair(b.wt_star, b.edge);
    };
    const std::size_t keep = std::min(list.size(), f + 1);
    std::partial_sort(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(keep), list.end(), by_weight);
    list.resize(keep);
  }
  return DagFeoOracle(s, f, g.num_edges(), std::move(parent), std::move(dist), std::move(lists));
}

}  // namespace fto
