#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ftoracle/dag_feo.hpp"
#include "ftoracle/dso.hpp"
#include "ftoracle/fdo.hpp"
#include "ftoracle/feo.hpp"
#include "ftoracle/generators.hpp"
#include "ftoracle/hdph.hpp"
#include "ftoracle/lowerbound.hpp"
#include "ftoracle/shortest_paths.hpp"
#include "ftoracle/ssrp_hitting.hpp"

namespace ftocli {

using namespace fto;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string tag(const char* what, std::uint64_t seed) { return std::string(what) + " seed=" + std::to_string(seed); }

std::size_t pick(std::size_t value, std::size_t fallback) { return value ? value : fallback; }

void hdph_suite(const SuiteOptions& o, RunReport& r) {
  const std::size_t n = pick(o.n, 40);
  const std::size_t m = pick(o.m, 3 * n);
  HdphOptions options;
  options.C = o.C;
  options.include_vertex_failures = true;
  options.window = o.window == "verbatim" ? PathWindow::kVerbatim : PathWindow::kTight;
  std::size_t violations = 0;
  Json sizes = Json::array();
  for (std::size_t k = 0; k < o.graphs; ++k) {
    const std::uint64_t seed = o.seed + k;
    const Graph g = random_strongly_connected(n, m, seed);
    const ApspData a(g);
    const ReferenceDso dso(g, a);
    const auto h = hdph(a, dso, options);
    const auto report = verify_hierarchy(g, h);
    violations += report.num_violations;
    r.check(tag("hitting", seed), report.ok());
    bool small = true;
    Json row = Json::array();
    for (const auto& level : h.levels) {
      row.push_back(level.pivots.size());
      const double bound = 8.0 * static_cast<double>(n) / std::pow(o.C, level.i) * std::log(static_cast<double>(n));
      if (static_cast<double>(level.pivots.size()) > bound) small = false;
    }
    r.check(tag("size", seed), small);
    sizes.push_back(row);
  }
  r.parameters["window"] = o.window;
  r.counters["violations"] = violations;
  r.counters["pivot_sizes"] = sizes;
}

void fdo_suite(const SuiteOptions& o, RunReport& r) {
  const std::size_t n = pick(o.n, 30);
  const std::size_t m = pick(o.m, 4 * n);
  const Rational stretch(o.eps.den() + o.eps.num(), o.eps.den());
  std::size_t violations = 0;
  std::size_t clean = 0;
  std::size_t queries = 0;
  for (std::size_t k = 0; k < o.graphs; ++k) {
    const std::uint64_t seed = o.seed + k;
    const Graph g = random_strongly_connected(n, m, seed);
    FdoBuildInfo info;
    const FdoOracle oracle = o.pivots == "sample" ? build_fdo_sampled(g, o.eps, o.c, seed, Failure::Kind::kEdge, &info)
                                                  : build_fdo_derandomized(g, o.eps, Failure::Kind::kEdge, &info);
    std::size_t bad = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
      const std::vector<EdgeId> failed{e};
      const Length truth = diameter(g, failed);
      const ScaledLength q = oracle.query(e);
      ++queries;
      const bool ok = truth.is_infinite() ? q.is_infinite()
                                          : q.is_finite() && q >= truth && q <= ScaledLength::times(truth, stretch);
      if (!ok) ++bad;
    }
    violations += bad;
    if (bad == 0) ++clean;
    if (o.pivots != "sample") r.check(tag("stretch", seed), bad == 0);
  }
  if (o.pivots == "sample") {
    // Sampling is allowed to miss on a few graphs.
    r.check("clean graphs >= 95%", 100 * clean >= 95 * o.graphs);
  }
  r.parameters["pivots"] = o.pivots;
  r.counters["violations"] = violations;
  r.counters["clean_graphs"] = clean;
  r.counters["oracle_calls"] = queries;
}

void feo_suite(const SuiteOptions& o, RunReport& r) {
  const std::size_t n = pick(o.n, 25);
  const std::size_t m = pick(o.m, 3 * n);
  const std::size_t f = pick(o.f, 2);
  std::size_t violations = 0;
  std::size_t calls = 0;
  for (std::size_t k = 0; k < o.graphs; ++k) {
    const std::uint64_t seed = o.seed + k;
    const Graph g = random_strongly_connected(n, m, seed);
    const FeoOracle oracle = build_feo(g, build_multi_dso(g, f), 1.0, f);
    std::size_t bad = 0;
    auto probe = [&](Vertex s, const std::vector<EdgeId>& F) {
      FeoQueryStats stats;
      const Length est = oracle.query(s, F, &stats);
      const Length truth = eccentricity(g, s, F);
      calls += stats.dso_calls;
      bool ok = stats.dso_calls == normalize_failures(F).size() && est >= truth;
      if (truth.is_finite()) ok = ok && est <= Length(2 * truth.value());
      if (!ok) ++bad;
    };
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) probe(s, {e});
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < o.samples; ++i) {
      std::vector<EdgeId> F;
      for (std::size_t j = 0; j < f; ++j) F.push_back(static_cast<EdgeId>(rng.below(g.num_edges())));
      probe(static_cast<Vertex>(rng.below(n)), F);
    }
    violations += bad;
    r.check(tag("sandwich", seed), bad == 0);
  }
  r.parameters["f"] = f;
  r.counters["violations"] = violations;
  r.counters["oracle_calls"] = calls;
}

void dag_feo_suite(const SuiteOptions& o, RunReport& r) {
  const std::size_t n = pick(o.n, 30);
  const std::size_t m = pick(o.m, 3 * n);
  const std::size_t f = pick(o.f, 3);
  std::size_t violations = 0;
  std::size_t scanned = 0;
  for (std::size_t k = 0; k < o.graphs; ++k) {
    const std::uint64_t seed = o.seed + k;
    const Graph g = random_dag(n, m, seed, o.max_weight);
    const DagFeoOracle oracle = build_dag_feo(g, 0, f);
    std::size_t bad = oracle.stored_entries() <= n * (f + 1) ? 0 : 1;
    auto probe = [&](std::vector<EdgeId> F) {
      F = normalize_failures(F);
      DagQueryStats stats;
      const Length est = oracle.query(F, &stats);
      const Length truth = eccentricity(g, 0, F);
      scanned += stats.entries_scanned;
      bool ok = stats.entries_scanned <= 2 * stats.tree_failures + stats.nontree_failures;
      if (truth.is_infinite()) {
        ok = ok && est.is_infinite();
      } else {
        ok = ok && est >= truth && est <= Length(static_cast<std::int64_t>(f + 1) * truth.value());
      }
      if (!ok) ++bad;
    };
    const auto E = static_cast<EdgeId>(g.num_edges());
    for (EdgeId a = 0; a < E; ++a) {
      probe({a});
      if (f >= 2) {
        for (EdgeId b = a + 1; b < E; ++b) probe({a, b});
      }
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < o.samples; ++i) {
      std::vector<EdgeId> F;
      for (std::size_t j = 0; j < f; ++j) F.push_back(static_cast<EdgeId>(rng.below(g.num_edges())));
      probe(F);
    }
    violations += bad;
    r.check(tag("sandwich", seed), bad == 0);
  }
  r.parameters["f"] = f;
  r.counters["violations"] = violations;
  r.counters["entries_scanned"] = scanned;
}

void lb_suite(const SuiteOptions& o, RunReport& r) {
  std::size_t failures = 0;
  for (std::int64_t D = 3; D <= 5; ++D) {
    for (std::size_t k = 0; k < o.graphs; ++k) {
      const std::uint64_t seed = o.seed + k;
      const BitMatrix X = random_admissible_matrix(4, seed);
      const auto inst = gen_fdo_lb(64, 16, D, X);
      bool ok = diameter(inst.graph) == Length(D);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 1; j < 4; ++j) {
          const std::vector<EdgeId> failed{inst.bc_edge[i][j]};
          const Length want(X[i][j] ? D : inst.raised_diameter());
          if (diameter(inst.graph, failed) != want) ok = false;
        }
      }
      const auto decoded = decode_fdo_lb(inst, [&](EdgeId e) { return diameter(inst.graph, std::vector<EdgeId>{e}); });
      ok = ok && decoded == X;
      if (!ok) ++failures;
      r.check("fdo-lb D=" + std::to_string(D) + " seed=" + std::to_string(seed), ok);
    }
  }
  for (std::size_t f = 1; f <= 3; ++f) {
    for (std::size_t k = 0; k < o.graphs; ++k) {
      const std::uint64_t seed = o.seed + k;
      const std::size_t N = std::size_t{1} << f;
      const std::vector<BitMatrix> Xs{random_nonnull_matrix(N, 2 * seed), random_nonnull_matrix(N, 2 * seed + 1)};
      const auto inst = gen_conn_lb(2 * (4 * N - 2), f, Xs);
      bool ok = is_strongly_connected(inst.graph);
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t j1 = 0; j1 < N; ++j1) {
          for (std::size_t j2 = 0; j2 < N; ++j2) {
            const auto F = failure_set(inst, b, j1, j2);
            ok = ok && F.size() == 2 * f && is_strongly_connected(inst.graph, F) == (Xs[b][j1][j2] == 1);
          }
        }
      }
      const auto decoded =
          decode_conn_lb(inst, [&](std::span<const EdgeId> F) { return is_strongly_connected(inst.graph, F); });
      ok = ok && decoded == Xs;
      if (!ok) ++failures;
      r.check("conn-lb f=" + std::to_string(f) + " seed=" + std::to_string(seed), ok);
    }
  }
  r.counters["violations"] = failures;
}

void ssrp_suite(const SuiteOptions& o, RunReport& r) {
  const std::size_t n = pick(o.n, 40);
  const std::size_t m = pick(o.m, 2 * n);
  std::size_t violations = 0;
  Json sizes = Json::array();
  for (std::size_t k = 0; k < o.graphs; ++k) {
    const std::uint64_t seed = o.seed + k;
    const Graph g = random_reachable_digraph(n, m, seed);
    const auto ctx = make_context(g, 0);
    const bool balanced = 3 * ctx.S.size() >= n && 3 * ctx.S.size() <= 2 * n && 3 * ctx.T.size() >= n &&
                          3 * ctx.T.size() <= 2 * n;
    r.check(tag("separator", seed), balanced);
    const auto chain = ssrp_hitting_chain(ctx);
    bool ok = true;
    Json row = Json::array();
    for (std::size_t level = 0; level < chain.size(); ++level) {
      const auto report = verify_ssrp_hitting(ctx, chain[level], level);
      violations += report.num_violations;
      ok = ok && report.ok();
      row.push_back(chain[level].size());
    }
    r.check(tag("hitting", seed), ok);
    sizes.push_back(row);
  }
  r.counters["violations"] = violations;
  r.counters["pivot_sizes"] = sizes;
}

void dso_suite(const SuiteOptions& o, RunReport& r) {
  const std::size_t n = pick(o.n, 15);
  const std::size_t m = pick(o.m, 3 * n);
  std::size_t mismatches = 0;
  Json sizes = Json::array();
  for (std::size_t k = 0; k < o.graphs; ++k) {
    const std::uint64_t seed = o.seed + k;
    const Graph g = random_strongly_connected(n, m, seed, o.max_weight);
    const ApspData a(g);
    const ReferenceDso ref(g, a);
    const FullDso full(g, o.r1);
    std::size_t bad = 0;
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      for (Vertex t = 0; t < static_cast<Vertex>(n); ++t) {
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
          const Failure f = Failure::edge(e);
          const Length want = ref.distance(s, t, f);
          if (full.distance(s, t, f) != want) {
            ++bad;
            continue;
          }
          if (want.is_infinite()) continue;
          const auto p = full.path(s, t, f);
          const std::vector<EdgeId> banned{e};
          if (!p || p->length != want || !is_valid_path(g, *p, banned) || p->source() != s || p->target() != t) ++bad;
        }
      }
    }
    mismatches += bad;
    r.check(tag("exact", seed), bad == 0);
    Json row = Json::array();
    for (const auto& level : full.levels()) row.push_back(level.num_pivots);
    sizes.push_back(row);
  }
  r.parameters["max_weight"] = o.max_weight;
  r.parameters["r1"] = o.r1.to_string();
  r.counters["violations"] = mismatches;
  r.counters["pivot_sizes"] = sizes;
}

}  // namespace

RunReport run_suite(const std::string& name, const SuiteOptions& options) {
  RunReport r;
  r.suite = name;
  r.parameters["n"] = options.n;
  r.parameters["m"] = options.m;
  r.parameters["graphs"] = options.graphs;
  r.parameters["seed"] = options.seed;
  r.parameters["eps"] = options.eps.to_string();
  r.parameters["C"] = options.C;
  const auto t0 = Clock::now();
  if (name == "hdph") {
    hdph_suite(options, r);
  } else if (name == "fdo") {
    fdo_suite(options, r);
  } else if (name == "feo") {
    feo_suite(options, r);
  } else if (name == "dag-feo") {
    dag_feo_suite(options, r);
  } else if (name == "lb") {
    lb_suite(options, r);
  } else if (name == "ssrp") {
    ssrp_suite(options, r);
  } else if (name == "dso") {
    dso_suite(options, r);
  } else {
    throw Error("unknown suite: " + name);
  }
  r.wall_time_ms = ms_since(t0);
  return r;
}

RunReport run_bench(const BenchOptions& o) {
  RunReport r;
  r.suite = "bench";
  const std::size_t m = pick(o.m, 4 * o.n);
  r.parameters["n"] = o.n;
  r.parameters["m"] = m;
  r.parameters["seed"] = o.seed;
  r.parameters["reps"] = o.reps;
  r.parameters["eps"] = o.eps.to_string();
  const auto start = Clock::now();

  const Graph g = random_strongly_connected(o.n, m, o.seed);
  Json timings = Json::object();
  auto best_of = [&](const char* name, auto&& body) {
    double best = 0;
    for (std::size_t i = 0; i < std::max<std::size_t>(1, o.reps); ++i) {
      const auto t0 = Clock::now();
      body();
      const double t = ms_since(t0);
      if (i == 0 || t < best) best = t;
    }
    timings[name] = best;
  };

  best_of("apsp_ms", [&] { ApspData a(g); });
  const ApspData a(g);
  const ReferenceDso dso(g, a);
  PivotHierarchy h;
  HdphOptions options;
  options.window = PathWindow::kTight;
  best_of("hdph_build_ms", [&] { h = hdph(a, dso, options); });
  std::optional<FdoOracle> fdo;
  best_of("fdo_build_ms", [&] { fdo.emplace(build_fdo_derandomized(g, o.eps)); });
  best_of("fdo_query_all_edges_ms", [&] {
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) (void)fdo->query(e);
  });
  std::vector<DsoLevel> dso_levels;
  best_of("full_dso_build_ms", [&] { dso_levels = FullDso(g, Rational(1, 1)).levels(); });

  Json hdph_table = Json::array();
  for (const auto& level : h.levels) {
    hdph_table.push_back({{"i", level.i}, {"paths", level.num_paths}, {"L", level.L}, {"pivots", level.pivots.size()}});
  }
  Json dso_table = Json::array();
  for (const auto& level : dso_levels) {
    dso_table.push_back({{"radius", level.radius.to_string()}, {"paths", level.num_paths}, {"pivots", level.num_pivots}});
  }
  r.counters["timings"] = timings;
  r.counters["hdph_levels"] = hdph_table;
  r.counters["dso_levels"] = dso_table;
  r.counters["fdo_pivots"] = fdo->pivots().size();
  r.check("fdo built", fdo.has_value());
  r.wall_time_ms = ms_since(start);
  return r;
}

}  // namespace ftocli
