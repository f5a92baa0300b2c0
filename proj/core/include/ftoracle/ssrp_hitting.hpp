#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"

namespace fto {

/// BFS tree of s split at a separator t into two edge-disjoint subtrees S
/// and T sharing t, together with the tree path P from s to t and the graph
/// G_P = G - E(P).
struct SsrpContext {
  Graph graph;
  Vertex source = 0;
  std::vector<EdgeId> parent_edge;  // kNoEdge at the source
  std::vector<std::size_t> subtree_size;
  Vertex separator = 0;
  std::vector<Vertex> S;  // sorted, contains the separator
  std::vector<Vertex> T;  // sorted, contains the separator
  std::vector<Vertex> path;  // s = v_0, ..., v_l = t
  std::vector<EdgeId> path_edges;
  std::vector<char> gp_ban;  // ban table of E(P)
  std::vector<std::vector<Length>> gp_dist;  // all-pairs distances in G_P

  std::size_t n() const { return graph.num_vertices(); }
};

/// Throws if g is weighted or some vertex is unreachable from s, or if no
/// vertex admits a split with n/3 <= |S|, |T| <= 2n/3 (e.g. n = 4).
SsrpContext make_context(const Graph& g, Vertex s);

/// Exact distance under weight 1 off P and weight eps < 1/n on P, kept as
/// the pair (edges off P, edges on P) ordered lexicographically.
struct EpsDist {
  std::int64_t unit = 0;
  std::int64_t eps = 0;

  static constexpr EpsDist infinity() { return {std::numeric_limits<std::int64_t>::max(), 0}; }
  constexpr bool is_infinite() const { return unit == std::numeric_limits<std::int64_t>::max(); }

  friend constexpr auto operator<=>(const EpsDist&, const EpsDist&) = default;
};

/// floor(log2 n) and floor(log2(n) / 2).
std::size_t ssrp_top_level(std::size_t n);
std::size_t ssrp_b0_levels(std::size_t n);

/// Pairs (u on P, v in T) with d_{G_P}(u,v) finite and > 2^{k+1}, strictly
/// closer to v than every earlier vertex of P. Sorted by (u, v).
std::vector<std::pair<Vertex, Vertex>> k_relevant_pairs(const SsrpContext& ctx, std::size_t k);

/// Paths collected for level k by removing P suffixes: the last 2^k edges of
/// the eps-shortest s-path to each vertex at distance in [2^k, 2^k + 1].
/// Deduplicated and sorted.
std::vector<std::vector<Vertex>> b0_paths(const SsrpContext& ctx, std::size_t k);

/// B_0 ... B_{k_max}, each greedy over b0_paths with L = 2^k.
std::vector<std::vector<Vertex>> compute_b0(const SsrpContext& ctx, std::size_t k_max);

/// BFS-tree paths in G_P of length exactly 2^k starting at a vertex of prev.
std::vector<std::vector<Vertex>> bk_paths(const SsrpContext& ctx, const std::vector<Vertex>& prev, std::size_t k);
std::vector<Vertex> compute_bk(const SsrpContext& ctx, const std::vector<Vertex>& prev, std::size_t k);

/// Levels 0 .. ssrp_top_level(n): compute_b0 up to ssrp_b0_levels(n), then
/// compute_bk chained from the previous level.
std::vector<std::vector<Vertex>> ssrp_hitting_chain(const SsrpContext& ctx);

struct SsrpReport {
  std::size_t k = 0;
  std::size_t num_pairs = 0;
  std::size_t num_violations = 0;
  std::vector<std::pair<Vertex, Vertex>> violations;  // first 100
  bool ok() const { return num_violations == 0; }
};

SsrpReport verify_ssrp_hitting(const SsrpContext& ctx, const std::vector<Vertex>& B, std::size_t k);

}  // namespace fto
