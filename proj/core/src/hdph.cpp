#include "ftoracle/hdph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ftoracle/greedy.hpp"

namespace fto {

std::optional<int> PivotHierarchy::level_of(Length d) const {
  if (d.is_infinite()) return std::nullopt;
  const auto x = static_cast<double>(d.value());
  std::optional<int> found;
  for (const auto& level : levels) {
    if (level.r_lo < x) found = level.i;
  }
  return found;
}

int hdph_top_level(std::size_t n, double C) {
  int k = 0;
  double p = 1;
  while (p < static_cast<double>(n)) {
    p *= C;
    ++k;
  }
  return std::max(k, 2);
}

namespace {

std::vector<Vertex> merged(const std::vector<Vertex>& a, const std::vector<Vertex>& b, const std::vector<Vertex>& c) {
  std::vector<Vertex> u(a);
  u.insert(u.end(), b.begin(), b.end());
  u.insert(u.end(), c.begin(), c.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

}  // namespace

PivotHierarchy hdph(const ApspData& apsp, const DistanceSensitivityOracle& dso, const HdphOptions& options) {
  const Graph& g = apsp.graph();
  const double C = options.C;
  if (!(C >= 1.5)) throw Error("hdph: C must be at least 3/2");
  if (!g.is_unweighted()) throw Error("hdph: graph must be unweighted");

  const std::size_t n = g.num_vertices();
  PivotHierarchy h;
  h.C = C;
  h.vertex_failures = options.include_vertex_failures;
  h.window = options.window;
  h.n = n;

  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);

  const int top = hdph_top_level(n, C);
  for (int i = 0; i <= top; ++i) {
    PivotLevel level;
    level.i = i;
    level.r_lo = std::pow(C, i);
    level.r_hi = std::pow(C, i + 1);
    if (i <= 2) {
      level.pivots = all;
      h.levels.push_back(std::move(level));
      continue;
    }

    double lo = 0;
    if (options.window == PathWindow::kVerbatim) {
      lo = std::pow(C, i - 6);
      level.L = static_cast<std::size_t>(std::max(1.0, std::ceil(lo)));
    } else {
      lo = (1.0 - 2.0 / (C * C)) * level.r_lo - 1.0;
      level.L = static_cast<std::size_t>(std::max(1.0, std::floor(lo) + 1.0));
    }
    const double hi = level.r_hi;
    auto in_window = [&](Length d) {
      if (d.is_infinite()) return false;
      const auto x = static_cast<double>(d.value());
      return x > lo && x <= hi;
    };

    const auto& levels = h.levels;
    const auto U = merged(levels[static_cast<std::size_t>(i - 3)].pivots, levels[static_cast<std::size_t>(i - 2)].pivots,
                          levels[static_cast<std::size_t>(i - 1)].pivots);

    std::set<std::vector<Vertex>> family;
    for (Vertex x : U) {
      for (Vertex y : U) {
        if (x == y) continue;
        const Length d = apsp.distance(x, y);
        if (d.is_infinite() || static_cast<double>(d.value()) > hi) continue;
        const auto p = apsp.path(x, y);
        if (in_window(d)) family.insert(p->vertices);

        auto consider = [&](const Failure& f) {
          if (in_window(dso.distance(x, y, f))) family.insert(dso.path(x, y, f)->vertices);
        };
        for (EdgeId e : p->edges) consider(Failure::edge(e));
        if (options.include_vertex_failures) {
          for (std::size_t k = 1; k + 1 < p->vertices.size(); ++k) consider(Failure::vertex(p->vertices[k]));
        }
      }
    }

    std::vector<std::vector<Vertex>> paths(family.begin(), family.end());
    level.num_paths = paths.size();
    level.pivots = greedy_pivot_selection(paths, level.L);
    h.levels.push_back(std::move(level));
  }
  return h;
}

namespace {

void check_matrix(const PivotHierarchy& h, const std::vector<std::vector<Length>>& d,
                  const std::optional<Failure>& f, HierarchyReport& report) {
  const std::size_t n = d.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      const Length dst = d[s][t];
      const auto level = h.level_of(dst);
      if (!level) continue;
      ++report.num_checked;
      const auto& pivots = h.levels[static_cast<std::size_t>(*level)].pivots;
      const bool hit = std::any_of(pivots.begin(), pivots.end(), [&](Vertex z) {
        return d[s][static_cast<std::size_t>(z)] + d[static_cast<std::size_t>(z)][t] == dst;
      });
      if (hit) continue;
      if (report.violations.size() < 100) {
        report.violations.push_back({*level, static_cast<Vertex>(s), static_cast<Vertex>(t), f, dst});
      }
      ++report.num_violations;
    }
  }
}

}  // namespace

HierarchyReport verify_hierarchy(const Graph& g, const PivotHierarchy& h) {
  HierarchyReport report;
  for (const auto& level : h.levels) report.level_sizes.push_back(level.pivots.size());

  const std::size_t n = g.num_vertices();
  auto matrix = [&](const Failure* f) {
    std::vector<std::vector<Length>> d;
    d.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
      d.push_back(f ? distances_from(g, static_cast<Vertex>(s), *f) : distances_from(g, static_cast<Vertex>(s)));
    }
    return d;
  };

  check_matrix(h, matrix(nullptr), std::nullopt, report);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto f = Failure::edge(static_cast<EdgeId>(e));
    check_matrix(h, matrix(&f), f, report);
  }
  if (h.vertex_failures) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto f = Failure::vertex(static_cast<Vertex>(v));
      check_matrix(h, matrix(&f), f, report);
    }
  }
  return report;
}

}  // namespace fto
