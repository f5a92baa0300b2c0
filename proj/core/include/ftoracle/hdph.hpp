#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ftoracle/dso.hpp"
#include "ftoracle/graph.hpp"
#include "ftoracle/shortest_paths.hpp"

namespace fto {

/// Lower end of the path-length window used to collect paths at level i.
enum class PathWindow {
  /// (C^(i-6), C^(i+1)] with L = ceil(C^(i-6)), as in the pseudocode.
  kVerbatim,
  /// ((1 - 2/C^2) C^i - 1, C^(i+1)]: the bound the correctness argument
  /// actually uses, minus one for rounding. Longer paths, smaller sets.
  kTight,
};

struct PivotLevel {
  int i = 0;
  double r_lo = 0;  // C^i
  double r_hi = 0;  // C^(i+1)
  std::vector<Vertex> pivots;
  std::size_t num_paths = 0;
  std::size_t L = 0;
};

struct PivotHierarchy {
  double C = 2;
  bool vertex_failures = false;
  PathWindow window = PathWindow::kVerbatim;
  std::size_t n = 0;
  std::vector<PivotLevel> levels;

  /// Largest i with r_lo < d, or nullopt when d <= 1.
  std::optional<int> level_of(Length d) const;
};

struct HdphOptions {
  double C = 2;
  bool include_vertex_failures = false;
  PathWindow window = PathWindow::kVerbatim;
};

/// Index of the top level: the smallest k with C^k >= n, at least 2.
int hdph_top_level(std::size_t n, double C);

/// B_0 = B_1 = B_2 = V. For i >= 3, paths between pivots of the previous three
/// levels (and their replacement paths for every edge, and optionally every
/// inner vertex, on them) whose length falls in the window are hit greedily.
/// The graph must be unweighted; dso must be exact.
PivotHierarchy hdph(const ApspData& apsp, const DistanceSensitivityOracle& dso, const HdphOptions& options = {});

struct HierarchyViolation {
  int level = 0;
  Vertex s = 0;
  Vertex t = 0;
  std::optional<Failure> failure;
  Length distance;
};

struct HierarchyReport {
  std::vector<HierarchyViolation> violations;  // at most the first 100
  std::size_t num_violations = 0;
  std::size_t num_checked = 0;
  std::vector<std::size_t> level_sizes;

  bool ok() const { return num_violations == 0; }
};

/// Checks every (s,t) and every (s,t,f) with f an edge, and a vertex when the
/// hierarchy covers vertex failures: if d lies in (C^i, C^(i+1)] then some
/// z in B_i has d(s,z) + d(z,t) = d in the same graph.
HierarchyReport verify_hierarchy(const Graph& g, const PivotHierarchy& h);

}  // namespace fto
