#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftoracle/length.hpp"

namespace fto {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed graph with positive integer weights.
///
/// Edge ids are positions in the construction order and never change.
/// Self-loops and parallel edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return out_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const EdgeId> in_edges(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

  /// The weight bound M (1 for an edgeless graph).
  Weight max_weight() const { return max_weight_; }
  bool is_unweighted() const { return max_weight_ == 1; }

  std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const;

  /// Every edge with v as tail or head, ascending.
  std::vector<EdgeId> incident_edges(Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  Weight max_weight_ = 1;
};

/// Failure of a single edge or a single vertex.
struct Failure {
  enum class Kind : std::uint8_t { kEdge, kVertex };

  Kind kind = Kind::kEdge;
  std::int32_t id = 0;

  static Failure edge(EdgeId e) { return {Kind::kEdge, e}; }
  static Failure vertex(Vertex v) { return {Kind::kVertex, v}; }

  bool is_edge() const { return kind == Kind::kEdge; }
  bool is_vertex() const { return kind == Kind::kVertex; }

  /// Edges that must be removed to realize the failure. A failed vertex v is
  /// the split edge (v-, v+); banning it equals banning all edges at v.
  std::vector<EdgeId> banned_edges(const Graph& g) const;

  std::string to_string() const;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Raised by parse_graph; carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the text graph format:
///
///     # comment
///     n m directed
///     u v w          (m lines, 0-based ids, integer w >= 1)
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace fto
