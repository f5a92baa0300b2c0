// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Ground truth comes from the textbook routines in oracles.hpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <set>
#include <string>

#include "ftoracle/dag_feo.hpp"
#include "ftoracle/dso.hpp"
#include "ftoracle/fdo.hpp"
#include "ftoracle/feo.hpp"
#include "ftoracle/generators.hpp"
#include "ftoracle/greedy.hpp"
#include "ftoracle/hdph.hpp"
#include "ftoracle/lowerbound.hpp"
#include "ftoracle/serialize.hpp"
#include "ftoracle/shortest_paths.hpp"
#include "ftoracle/ssrp_hitting.hpp"
#include "oracles.hpp"

using namespace fto;

namespace {

// Pinned thresholds.
constexpr double kFdoTimeLimitSeconds = 60.0;
constexpr std::size_t kSampledCleanMin = 95;  // of 100 seeds
constexpr double kHdphSizeSlack = 8.0;        // |B_i| <= 8 (n / 2^i) ln n
const Rational kEps(1, 2);

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::int64_t pow2(int i) { return std::int64_t{1} << i; }

// Walks the path by hand instead of trusting the library's validator.
bool path_ok(const Graph& g, const Path& p, Vertex s, Vertex t, EdgeId failed, Length want) {
  if (p.vertices.empty() || p.vertices.front() != s || p.vertices.back() != t) return false;
  if (p.edges.size() + 1 != p.vertices.size()) return false;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    if (p.edges[k] == failed) return false;
    const Edge& e = g.edge(p.edges[k]);
    if (e.tail != p.vertices[k] || e.head != p.vertices[k + 1]) return false;
    total += e.weight;
  }
  return want.is_finite() && Length(total) == want && p.length == want;
}

// ---------------------------------------------------------------------------

std::size_t fdo_violations(const FdoOracle& o, const Graph& g) {
  std::size_t bad = 0;
  const Rational stretch(kEps.den() + kEps.num(), kEps.den());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    const Length truth = oracle::diameter(g, {e});
    const ScaledLength q = o.query(e);
    const bool ok = truth.is_infinite()
                        ? q.is_infinite()
                        : q.is_finite() && q >= truth && q <= ScaledLength::times(truth, stretch);
    if (!ok) ++bad;
  }
  return bad;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::size_t bad = 0, hdph_graphs = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_strongly_connected(30, 120, seed);
    FdoBuildInfo info;
    const FdoOracle o = build_fdo_derandomized(g, kEps, Failure::Kind::kEdge, &info);
    if (info.pivot_source == "hdph") ++hdph_graphs;
    bad += fdo_violations(o, g);
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kFdoTimeLimitSeconds,
          fmt("20 graphs, %zu violations, %zu built from hierarchy pivots, %.1f s (limit %.0f s)", bad, hdph_graphs,
              secs, kFdoTimeLimitSeconds)};
}

Outcome criterion2() {
  std::size_t clean = 0, total_bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_strongly_connected(30, 120, seed);
    const FdoOracle o = build_fdo_sampled(g, kEps, 3.0, seed);
    const std::size_t bad = fdo_violations(o, g);
    total_bad += bad;
    if (bad == 0) ++clean;
  }
  return {clean >= kSampledCleanMin,
          fmt("%zu/100 seeds violation-free (need %zu), %zu violations overall", clean, kSampledCleanMin, total_bad)};
}

// Per-level hitting identity for one distance matrix.
std::size_t hdph_misses(const PivotHierarchy& h, const std::vector<std::vector<Length>>& d,
                        std::optional<Vertex> skip) {
  std::size_t misses = 0;
  const std::size_t n = d.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (skip && (static_cast<Vertex>(s) == *skip || static_cast<Vertex>(t) == *skip)) continue;
      const Length dst = d[s][t];
      if (dst.is_infinite() || dst.value() <= 1) continue;
      bool hit = false, level_found = false;
      for (const auto& level : h.levels) {
        if (!(dst.value() > pow2(level.i) && dst.value() <= pow2(level.i + 1))) continue;
        level_found = true;
        for (Vertex z : level.pivots) {
          if (d[s][static_cast<std::size_t>(z)] + d[static_cast<std::size_t>(z)][t] == dst) hit = true;
        }
      }
      if (!level_found || !hit) ++misses;
    }
  }
  return misses;
}

Outcome criterion3() {
  std::size_t misses = 0, oversized = 0;
  double worst_ratio = 0;
  const std::size_t n = 40;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_strongly_connected(n, 3 * n, seed);
    const ApspData a(g);
    const ReferenceDso dso(g, a);
    HdphOptions options;
    options.C = 2;
    options.include_vertex_failures = true;
    options.window = PathWindow::kTight;
    const auto h = hdph(a, dso, options);

    misses += hdph_misses(h, oracle::floyd_warshall(n, oracle::arcs_without(g)), std::nullopt);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
      misses += hdph_misses(h, oracle::floyd_warshall(n, oracle::arcs_without(g, {e})), std::nullopt);
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      misses += hdph_misses(h, oracle::floyd_warshall(n, oracle::arcs_without(g, {}, v)), v);
    }
    for (const auto& level : h.levels) {
      const double unit = static_cast<double>(n) / static_cast<double>(pow2(level.i)) * std::log(static_cast<double>(n));
      const double ratio = static_cast<double>(level.pivots.size()) / unit;
      worst_ratio = std::max(worst_ratio, ratio);
      if (ratio > kHdphSizeSlack) ++oversized;
    }
  }
  return {misses == 0 && oversized == 0,
          fmt("20 graphs n=40, %zu hitting misses, %zu oversized levels, max |B_i|/((n/2^i) ln n) = %.3f (cap %.0f)",
              misses, oversized, worst_ratio, kHdphSizeSlack)};
}

Outcome criterion4() {
  Rng rng(4);
  std::size_t uncovered = 0, over = 0;
  const std::size_t n = 256;
  const std::size_t Ls[] = {4, 8, 16};
  for (std::size_t trial = 0; trial < 200; ++trial) {
    const std::size_t L = Ls[trial % 3];
    const std::size_t q = 1 + rng.below(500);
    std::vector<std::vector<Vertex>> family;
    for (std::size_t k = 0; k < q; ++k) {
      std::vector<Vertex> all(n);
      for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
      rng.shuffle(all);
      all.resize(L + rng.below(2 * L));
      family.push_back(all);
    }
    const auto B = greedy_pivot_selection(family, L);
    const std::set<Vertex> chosen(B.begin(), B.end());
    for (const auto& p : family) {
      if (std::none_of(p.begin(), p.end(), [&](Vertex v) { return chosen.count(v) > 0; })) ++uncovered;
    }
    const double bound =
        std::ceil(static_cast<double>(n) / static_cast<double>(L) * (std::log(static_cast<double>(q)) + 1.0));
    if (static_cast<double>(B.size()) > bound) ++over;
  }
  return {uncovered == 0 && over == 0, fmt("200 families, %zu uncovered sets, %zu over the size bound", uncovered, over)};
}

Outcome criterion5() {
  std::size_t mismatches = 0, bad_paths = 0, queries = 0;
  auto sweep = [&](const Graph& g) {
    const std::size_t n = g.num_vertices();
    const FullDso dso(g, Rational(1, 1));
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
      const auto d = oracle::floyd_warshall(n, oracle::arcs_without(g, {e}));
      for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        for (Vertex t = 0; t < static_cast<Vertex>(n); ++t) {
          ++queries;
          const Length want = d[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
          const auto r = dso.query(s, t, Failure::edge(e));
          if (r.distance() != want) {
            ++mismatches;
            continue;
          }
          const auto p = r.path();
          if (p.has_value() != want.is_finite() || (p && !path_ok(g, *p, s, t, e, want))) ++bad_paths;
        }
      }
    }
  };
  for (std::uint64_t seed = 0; seed < 10; ++seed) sweep(random_strongly_connected(20, 60, seed, 1));
  for (std::uint64_t seed = 0; seed < 5; ++seed) sweep(random_strongly_connected(15, 45, seed, 3));
  return {mismatches == 0 && bad_paths == 0,
          fmt("%zu (s,t,e) queries, %zu distance mismatches, %zu bad paths", queries, mismatches, bad_paths)};
}

Outcome criterion6() {
  std::size_t bad = 0, wrong_calls = 0, queries = 0;
  const std::size_t n = 25;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_strongly_connected(n, 3 * n, seed);
    const FeoOracle o = build_feo(g, build_multi_dso(g, 2), 1.0, 2);
    auto probe = [&](Vertex s, const std::vector<EdgeId>& F) {
      ++queries;
      FeoQueryStats stats;
      const Length est = o.query(s, F, &stats);
      const Length truth = oracle::ecc(n, oracle::arcs_without(g, F), s);
      if (stats.dso_calls != F.size()) ++wrong_calls;
      const bool ok = truth.is_infinite() ? est.is_infinite() : est >= truth && est <= Length(2 * truth.value());
      if (!ok) ++bad;
    };
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) probe(s, {e});
    }
    Rng rng(seed);
    for (int k = 0; k < 500; ++k) {
      const auto a = static_cast<EdgeId>(rng.below(g.num_edges()));
      auto b = static_cast<EdgeId>(rng.below(g.num_edges() - 1));
      if (b >= a) ++b;
      probe(static_cast<Vertex>(rng.below(n)), {std::min(a, b), std::max(a, b)});
    }
  }
  return {bad == 0 && wrong_calls == 0,
          fmt("%zu queries, %zu sandwich violations, %zu with DSO calls != |F|", queries, bad, wrong_calls)};
}

Outcome criterion7() {
  const std::size_t n = 30, f = 3;
  std::size_t bad = 0, over_store = 0, over_scan = 0, queries = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_dag(n, 3 * n, seed, 5);
    const DagFeoOracle o = build_dag_feo(g, 0, f);
    if (o.stored_entries() > n * (f + 1)) ++over_store;
    auto probe = [&](const std::vector<EdgeId>& F) {
      ++queries;
      DagQueryStats stats;
      const Length est = o.query(F, &stats);
      const Length truth = oracle::ecc(n, oracle::arcs_without(g, F), 0);
      // F_0: failed tree edges, F_1: the rest.
      std::size_t f0 = 0;
      for (EdgeId e : F) f0 += o.is_tree_edge(e) ? 1 : 0;
      if (stats.entries_scanned > 2 * f0 + (F.size() - f0)) ++over_scan;
      const bool ok = truth.is_infinite()
                          ? est.is_infinite()
                          : est >= truth && est <= Length(static_cast<std::int64_t>(f + 1) * truth.value());
      if (!ok) ++bad;
    };
    const auto E = static_cast<EdgeId>(g.num_edges());
    probe({});
    for (EdgeId a = 0; a < E; ++a) {
      probe({a});
      for (EdgeId b = a + 1; b < E; ++b) probe({a, b});
    }
    Rng rng(seed);
    for (int k = 0; k < 500; ++k) {
      std::set<EdgeId> F;
      while (F.size() < 3) F.insert(static_cast<EdgeId>(rng.below(g.num_edges())));
      probe(std::vector<EdgeId>(F.begin(), F.end()));
    }
  }
  return {bad == 0 && over_store == 0 && over_scan == 0,
          fmt("%zu queries, %zu outside [ecc, (f+1) ecc], %zu oracles over n(f+1) entries, %zu over the scan bound",
              queries, bad, over_store, over_scan)};
}

Outcome criterion8() {
  std::size_t failures = 0, instances = 0;
  for (std::int64_t D = 3; D <= 5; ++D) {
    const std::int64_t raised = D % 2 ? (3 * D - 1) / 2 : 3 * D / 2 - 1;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ++instances;
      const BitMatrix X = random_admissible_matrix(4, seed);
      const auto inst = gen_fdo_lb(64, 16, D, X);
      bool ok = oracle::diameter(inst.graph) == Length(D);
      // The first column is a hub column; the encoding lives in columns 1..N-1.
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 1; j < 4; ++j) {
          const Length got = oracle::diameter(inst.graph, {inst.bc_edge[i][j]});
          ok = ok && got == Length(X[i][j] ? D : raised);
        }
      }
      const auto decoded = decode_fdo_lb(inst, [&](EdgeId e) { return oracle::diameter(inst.graph, {e}); });
      ok = ok && decoded == X;
      if (!ok) ++failures;
    }
  }
  return {failures == 0, fmt("%zu instances (D = 3, 4, 5), %zu failures", instances, failures)};
}

Outcome criterion9() {
  std::size_t failures = 0, instances = 0;
  for (std::size_t f = 1; f <= 3; ++f) {
    const std::size_t N = std::size_t{1} << f;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ++instances;
      const std::vector<BitMatrix> Xs{random_nonnull_matrix(N, 2 * seed), random_nonnull_matrix(N, 2 * seed + 1)};
      const auto inst = gen_conn_lb(2 * (4 * N - 2), f, Xs);
      bool ok = oracle::strongly_connected(inst.graph);
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t j1 = 0; j1 < N; ++j1) {
          for (std::size_t j2 = 0; j2 < N; ++j2) {
            const auto F = failure_set(inst, b, j1, j2);
            ok = ok && F.size() == 2 * f && oracle::strongly_connected(inst.graph, F) == (Xs[b][j1][j2] == 1);
          }
        }
      }
      const auto decoded = decode_conn_lb(inst, [&](std::span<const EdgeId> F) {
        return oracle::strongly_connected(inst.graph, std::vector<EdgeId>(F.begin(), F.end()));
      });
      ok = ok && decoded == Xs;
      if (!ok) ++failures;
    }
  }
  return {failures == 0, fmt("%zu instances (f = 1, 2, 3), %zu failures", instances, failures)};
}

Outcome criterion10() {
  const std::size_t n = 40;
  std::size_t misses = 0, pairs = 0, unbalanced = 0, disagreements = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_reachable_digraph(n, 2 * n, seed);
    const auto ctx = make_context(g, 0);
    auto balanced = [&](std::size_t size) { return 3 * size >= n && 3 * size <= 2 * n; };
    std::set<Vertex> both;
    std::set_intersection(ctx.S.begin(), ctx.S.end(), ctx.T.begin(), ctx.T.end(), std::inserter(both, both.end()));
    if (!balanced(ctx.S.size()) || !balanced(ctx.T.size()) || ctx.S.size() + ctx.T.size() != n + 1 ||
        both != std::set<Vertex>{ctx.separator}) {
      ++unbalanced;
    }

    // Relevant pairs and hitting recomputed from scratch in G - E(P).
    const auto d = oracle::floyd_warshall(n, oracle::arcs_without(g, ctx.path_edges));
    const auto chain = ssrp_hitting_chain(ctx);
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const std::int64_t reach = pow2(static_cast<int>(k) + 1);
      std::size_t level_misses = 0;
      for (Vertex v : ctx.T) {
        Length best = Length::infinity();
        for (Vertex u : ctx.path) {
          const Length duv = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          if (!(duv < best)) continue;
          best = duv;
          if (duv.is_infinite() || duv.value() <= reach) continue;
          ++pairs;
          const bool hit = std::any_of(chain[k].begin(), chain[k].end(), [&](Vertex b) {
            const Length ub = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(b)];
            return ub <= Length(reach) && ub + d[static_cast<std::size_t>(b)][static_cast<std::size_t>(v)] == duv;
          });
          if (!hit) ++level_misses;
        }
      }
      misses += level_misses;
      if (verify_ssrp_hitting(ctx, chain[k], k).ok() != (level_misses == 0)) ++disagreements;
    }
  }
  return {misses == 0 && unbalanced == 0 && disagreements == 0,
          fmt("30 graphs n=40, %zu relevant pairs, %zu unhit, %zu bad separators, %zu verifier disagreements", pairs,
              misses, unbalanced, disagreements)};
}

Outcome criterion11() {
  std::vector<std::string> differs;
  auto same = [&](const char* name, const std::function<std::string()>& run) {
    if (run() != run()) differs.push_back(name);
  };
  same("hdph", [] {
    const Graph g = random_strongly_connected(40, 120, 11);
    const ApspData a(g);
    const ReferenceDso dso(g, a);
    HdphOptions options;
    options.include_vertex_failures = true;
    options.window = PathWindow::kTight;
    return hierarchy_to_json(hdph(a, dso, options)).dump();
  });
  same("hdph verbatim", [] {
    const Graph g = random_strongly_connected(40, 120, 12);
    const ApspData a(g);
    const ReferenceDso dso(g, a);
    return hierarchy_to_json(hdph(a, dso)).dump();
  });
  same("fdo derandomized", [] {
    return fdo_to_json(build_fdo_derandomized(random_strongly_connected(30, 120, 3), kEps)).dump();
  });
  same("extend_pivots", [] {
    const Graph g = random_strongly_connected(20, 60, 5, 1);
    const FullDso dso(g, Rational(1, 1));
    return pivot_sets_to_json(dso.pivot_sets()).dump();
  });
  same("extend_pivots weighted", [] {
    const Graph g = random_strongly_connected(15, 45, 6, 3);
    const FullDso dso(g, Rational(1, 1));
    return pivot_sets_to_json(dso.pivot_sets()).dump();
  });
  same("compute_b0/compute_bk", [] {
    const auto ctx = make_context(random_reachable_digraph(40, 80, 7), 0);
    return pivot_sets_to_json(ssrp_hitting_chain(ctx)).dump();
  });
  same("greedy", [] {
    Rng rng(9);
    std::vector<std::vector<Vertex>> family(300);
    for (auto& p : family) {
      for (int k = 0; k < 12; ++k) p.push_back(static_cast<Vertex>(rng.below(128)));
    }
    return pivot_sets_to_json({greedy_pivot_selection(family, 4)}).dump();
  });
  std::string list;
  for (const auto& d : differs) list += " " + d;
  return {differs.empty(), differs.empty() ? "7 pipelines, identical output on repeat runs" : "differs:" + list};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"FDO stretch, derandomized pivots", criterion1},
      {"FDO stretch, sampled pivots", criterion2},
      {"HDPH hitting and size", criterion3},
      {"greedy hitting-set bound", criterion4},
      {"extend pipeline equals brute force", criterion5},
      {"FEO sandwich", criterion6},
      {"DAG-FEO sandwich, storage and scans", criterion7},
      {"diameter lower-bound encoding", criterion8},
      {"connectivity lower-bound encoding", criterion9},
      {"SSRP hitting chain", criterion10},
      {"determinism", criterion11},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %2d %s: %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", index, name, out.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed ? 1 : 0;
}
