#pragma once

#include <cstddef>
#include <vector>

#include "ftoracle/graph.hpp"

namespace fto {

/// Hitting set for a family of vertex sequences.
///
/// Each sequence is cut to its first L distinct vertices, then the vertex in
/// the most unhit sequences is picked repeatedly (ties to the smallest id).
/// The result is sorted and has at most ceil((n/L)(ln q + 1)) vertices, where
/// n is the universe size and q the number of sequences.
/// Throws if a sequence has fewer than L distinct vertices.
std::vector<Vertex> greedy_pivot_selection(const std::vector<std::vector<Vertex>>& paths, std::size_t L);

/// ceil((n/L)(ln q + 1)), 0 when q == 0.
std::size_t greedy_size_bound(std::size_t n, std::size_t L, std::size_t q);

}  // namespace fto
