#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"
#include "ftoracle/perturbed_dist.hpp"

namespace fto {

struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  Length length{0};

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  std::size_t hops() const { return edges.size(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Concatenates p (ending at x) and q (starting at x).
Path concat(const Path& p, const Path& q);

/// True when p is a simple path of g, avoids every banned edge, and its
/// length equals the weight sum.
bool is_valid_path(const Graph& g, const Path& p, std::span<const EdgeId> banned = {});

/// Banned-edge lookup table sized to m.
std::vector<char> ban_table(const Graph& g, std::span<const EdgeId> banned);

/// Result of one single-source run under perturbed weights.
class ShortestPathTree {
 public:
  ShortestPathTree() = default;
  ShortestPathTree(Vertex source, std::vector<PerturbedDist> dist, std::vector<EdgeId> parent_edge)
      : source_(source), dist_(std::move(dist)), parent_edge_(std::move(parent_edge)) {}

  Vertex source() const { return source_; }
  std::size_t size() const { return dist_.size(); }

  const PerturbedDist& perturbed(Vertex t) const { return dist_[static_cast<std::size_t>(t)]; }
  Length distance(Vertex t) const { return perturbed(t).base; }
  bool reachable(Vertex t) const { return distance(t).is_finite(); }

  /// kNoEdge for the source and for unreachable vertices.
  EdgeId parent_edge(Vertex t) const { return parent_edge_[static_cast<std::size_t>(t)]; }
  Vertex parent(const Graph& g, Vertex t) const;

  /// Edge e lies on the chosen path to t.
  bool uses_edge(Vertex t, EdgeId e) const { return perturbed(t).mask.test(e); }

  std::optional<Path> path_to(const Graph& g, Vertex t) const;

 private:
  Vertex source_ = kNoVertex;
  std::vector<PerturbedDist> dist_;
  std::vector<EdgeId> parent_edge_;
};

/// Dijkstra from s on G minus the banned edges. Vertices farther than bound
/// are left at infinity.
ShortestPathTree sssp(const Graph& g, Vertex s, std::span<const EdgeId> banned = {},
                      Length bound = Length::infinity());
ShortestPathTree sssp(const Graph& g, Vertex s, const std::vector<char>& ban,
                      Length bound = Length::infinity());

/// All-pairs chosen shortest paths. Because the perturbed paths are unique,
/// every subpath of a chosen path is the chosen path of its endpoints.
class ApspData {
 public:
  ApspData() = default;
  explicit ApspData(const Graph& g);

  std::size_t num_vertices() const { return trees_.size(); }
  const ShortestPathTree& tree(Vertex s) const { return trees_[static_cast<std::size_t>(s)]; }

  const PerturbedDist& perturbed(Vertex s, Vertex t) const { return tree(s).perturbed(t); }
  Length distance(Vertex s, Vertex t) const { return tree(s).distance(t); }
  /// Predecessor of t on the chosen s-t path; kNoVertex when t == s or unreachable.
  Vertex pred(Vertex s, Vertex t) const;
  bool on_path(Vertex s, Vertex t, EdgeId e) const { return tree(s).uses_edge(t, e); }
  std::optional<Path> path(Vertex s, Vertex t) const { return tree(s).path_to(*graph_, t); }

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_ = nullptr;
  std::vector<ShortestPathTree> trees_;
};

ApspData apsp(const Graph& g);

/// Chosen shortest s-t path in G - F, or nullopt when t is unreachable.
std::optional<Path> replacement_path(const Graph& g, Vertex s, Vertex t, std::span<const EdgeId> failed);
Length replacement_distance(const Graph& g, Vertex s, Vertex t, std::span<const EdgeId> failed);

/// Unperturbed single-source distances in G - banned; cheaper than sssp.
std::vector<Length> distances_from(const Graph& g, Vertex s, const std::vector<char>& ban);
std::vector<Length> distances_from(const Graph& g, Vertex s, std::span<const EdgeId> banned = {});

/// All-pairs unperturbed distances in G - banned.
std::vector<std::vector<Length>> distance_matrix(const Graph& g, std::span<const EdgeId> banned = {});

Length eccentricity(const Graph& g, Vertex s, std::span<const EdgeId> failed = {});
Length diameter(const Graph& g, std::span<const EdgeId> failed = {});

/// Distances, eccentricity and diameter with a single edge or vertex failure.
/// A failed vertex has no distances to or from it; it is excluded from the
/// eccentricity and diameter maxima.
std::vector<Length> distances_from(const Graph& g, Vertex s, const Failure& f);
Length eccentricity(const Graph& g, Vertex s, const Failure& f);
Length diameter(const Graph& g, const Failure& f);

bool is_strongly_connected(const Graph& g, std::span<const EdgeId> banned = {});
bool is_strongly_connected(const Graph& g, const std::vector<char>& ban);

/// Edges whose removal destroys strong connectivity. Requires g strongly connected.
std::vector<EdgeId> strong_bridges(const Graph& g);

}  // namespace fto
