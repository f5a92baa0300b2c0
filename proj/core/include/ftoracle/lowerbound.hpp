#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"

namespace fto {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

/// N x N matrix with the first row and column all ones and the rest uniform.
BitMatrix random_admissible_matrix(std::size_t N, std::uint64_t seed);
/// Uniform N x N matrix conditioned on having at least one 1.
BitMatrix random_nonnull_matrix(std::size_t N, std::uint64_t seed);

/// Whitespace-separated 0/1 rows, one row per line.
BitMatrix parse_matrix(std::istream& in);
BitMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& out, const BitMatrix& X);

/// Single-failure diameter encoding of an admissible matrix.
///
/// Vertex ids: a_{k,i} at (k-1)N + i, then b_i, c_j, d_{k,j} (block-major),
/// then the hub v for even D, then the remaining vertices r_l. Indices here
/// are 0-based.
struct FdoLbInstance {
  Graph graph;
  std::int64_t D = 0;
  std::size_t N = 0;
  std::size_t t = 0;
  BitMatrix X;
  std::vector<std::vector<EdgeId>> bc_edge;  // bc_edge[i][j] = id of b_i -> c_j

  Vertex a(std::size_t k, std::size_t i) const { return static_cast<Vertex>(k * N + i); }
  Vertex b(std::size_t i) const { return static_cast<Vertex>(t * N + i); }
  Vertex c(std::size_t j) const { return static_cast<Vertex>((t + 1) * N + j); }
  Vertex d(std::size_t k, std::size_t j) const { return static_cast<Vertex>((t + 2 + k) * N + j); }
  /// Diameter after failing b_i -> c_j when X[i][j] = 0.
  std::int64_t raised_diameter() const;
};

FdoLbInstance gen_fdo_lb(std::size_t n, std::size_t m, std::int64_t D, const BitMatrix& X);

BitMatrix decode_fdo_lb(const FdoLbInstance& inst, const std::function<Length(EdgeId)>& diam_query);

/// Finite-stretch lower-bound encoding of alpha non-null matrices with 2f
/// failures.
///
/// Block i occupies ids [iK, (i+1)K). The out-tree T_l is heap ordered from
/// s_i at offset 0; the in-tree T_r is heap ordered from t_i at offset
/// 2^{f+1}-1. Leaf j of either tree has heap index 2^f - 1 + j. Vertices
/// past alpha*K are pendants.
struct ConnLbInstance {
  Graph graph;
  std::size_t f = 0;
  std::size_t N = 0;
  std::size_t K = 0;
  std::size_t alpha = 0;
  std::vector<BitMatrix> Xs;
  std::vector<std::vector<EdgeId>> left_edge;   // [block][child heap index], parent -> child
  std::vector<std::vector<EdgeId>> right_edge;  // [block][child heap index], child -> parent
  std::vector<std::vector<std::vector<EdgeId>>> leaf_edge;  // kNoEdge when absent

  std::size_t tree_size() const { return 2 * N - 1; }
  Vertex left(std::size_t block, std::size_t heap) const { return static_cast<Vertex>(block * K + heap); }
  Vertex right(std::size_t block, std::size_t heap) const {
    return static_cast<Vertex>(block * K + tree_size() + heap);
  }
  Vertex s(std::size_t block) const { return left(block, 0); }
  Vertex t(std::size_t block) const { return right(block, 0); }
};

ConnLbInstance gen_conn_lb(std::size_t n, std::size_t f, const std::vector<BitMatrix>& Xs);

/// Sibling edges off the root-leaf paths to l_{j1} and r_{j2}; 2f ids, sorted.
std::vector<EdgeId> failure_set(const ConnLbInstance& inst, std::size_t block, std::size_t j1, std::size_t j2);

std::vector<BitMatrix> decode_conn_lb(const ConnLbInstance& inst,
                                      const std::function<bool(std::span<const EdgeId>)>& connected_query);

}  // namespace fto
