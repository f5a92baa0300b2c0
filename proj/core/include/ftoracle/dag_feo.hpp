#pragma once

#include <span>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"

namespace fto {

/// Kahn order; throws if g has a cycle.
std::vector<Vertex> topological_order(const Graph& g);

struct DagQueryStats {
  std::size_t tree_failures = 0;      // |F_0|
  std::size_t nontree_failures = 0;   // |F_1|
  std::size_t entries_scanned = 0;
};

/// Single-source eccentricity oracle for DAGs with up to f edge failures.
///
/// wt*(x,y) = d(s,x) + w(x,y) - d(s,y). Each vertex keeps its f+1 non-tree
/// in-edges of least wt* (ties by id). A failed tree edge into y is charged
/// the wt* of the first surviving entry of y's list; the estimate is
/// ecc(s) plus those charges and lies in [ecc_{G-F}(s), (f+1) ecc_{G-F}(s)].
class DagFeoOracle {
 public:
  struct Entry {
    EdgeId edge;
    Weight wt_star;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  DagFeoOracle() = default;
  DagFeoOracle(Vertex source, std::size_t f, std::size_t num_edges, std::vector<EdgeId> parent_edge,
               std::vector<Length> dist0, std::vector<std::vector<Entry>> lists);

  Length query(std::span<const EdgeId> failed, DagQueryStats* stats = nullptr) const;

  Vertex source() const { return source_; }
  std::size_t f() const { return f_; }
  std::size_t num_edges() const { return is_tree_.size(); }
  Length ecc0() const { return ecc0_; }
  const std::vector<Length>& dist0() const { return dist0_; }
  const std::vector<EdgeId>& parent_edges() const { return parent_edge_; }
  bool is_tree_edge(EdgeId e) const { return is_tree_.at(static_cast<std::size_t>(e)) != 0; }
  const std::vector<Entry>& in_list(Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
  std::size_t stored_entries() const;

 private:
  Vertex source_ = 0;
  std::size_t f_ = 0;
  std::vector<EdgeId> parent_edge_;
  std::vector<char> is_tree_;
  std::vector<Vertex> tree_head_;
  std::vector<Length> dist0_;
  Length ecc0_;
  std::vector<std::vector<Entry>> lists_;
};

/// Throws on a cycle, an invalid source, or a vertex unreachable from s.
DagFeoOracle build_dag_feo(const Graph& g, Vertex s, std::size_t f);

/// wt* of every edge for the shortest-path distances from s (infinite when
/// the tail is unreachable).
std::vector<Length> dag_reduced_weights(const Graph& g, const std::vector<Length>& dist);

}  // namespace fto
