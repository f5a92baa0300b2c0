#include "ftoracle/fdo.hpp"

#include <algorithm>
#include <cmath>

#include "ftoracle/generators.hpp"

namespace fto {

FdoOracle::FdoOracle(Failure::Kind kind, std::size_t n, std::size_t num_ids, Length diam0, Rational eps,
                     std::vector<Vertex> pivots)
    : kind_(kind),
      n_(n),
      diam0_(diam0),
      eps_(eps),
      pivots_(std::move(pivots)),
      phi_(num_ids),
      bridge_(num_ids, 0) {}

ScaledLength FdoOracle::query(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= phi_.size()) throw Error("fdo query: id out of range");
  const auto k = static_cast<std::size_t>(id);
  if (bridge_[k]) return ScaledLength::infinity();
  const Length base = phi_[k] ? *phi_[k] : diam0_;
  if (base.is_infinite()) return ScaledLength::infinity();
  // base + (p/q) * diam0 = (q*base + p*diam0) / q
  const std::int64_t q = eps_.den();
  return ScaledLength(Length(q * base.value() + eps_.num() * diam0_.value()), q);
}

void FdoOracle::set_phi(std::int32_t id, Length phi) { phi_.at(static_cast<std::size_t>(id)) = phi; }
void FdoOracle::set_disconnecting(std::int32_t id) { bridge_.at(static_cast<std::size_t>(id)) = 1; }

std::vector<std::int32_t> FdoOracle::x_ids() const {
  std::vector<std::int32_t> out;
  for (std::size_t k = 0; k < phi_.size(); ++k) {
    if (phi_[k]) out.push_back(static_cast<std::int32_t>(k));
  }
  return out;
}

std::vector<std::int32_t> FdoOracle::y_ids() const {
  std::vector<std::int32_t> out;
  for (std::size_t k = 0; k < bridge_.size(); ++k) {
    if (bridge_[k]) out.push_back(static_cast<std::int32_t>(k));
  }
  return out;
}

std::vector<Vertex> sample_pivots(std::size_t n, double L, double c, std::uint64_t seed) {
  const double need = c * std::log(static_cast<double>(n));
  if (L < need) throw Error("sample_pivots: L below c ln n");
  const double p = L > 0 ? need / L : 1.0;
  Rng rng(seed);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (rng.bernoulli(p)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

int derandomized_level(double C, int top, Length diameter, const Rational& eps) {
  if (diameter.is_infinite()) throw Error("derandomized pivots: infinite diameter");
  // half = eps * D / 2 = num / den
  const double num = static_cast<double>(eps.num()) * static_cast<double>(diameter.value());
  const double den = 2.0 * static_cast<double>(eps.den());
  if (num <= den) throw Error("derandomized pivots: eps*D/2 <= 1, no usable level");
  int i = 0;
  while (std::pow(C, i + 1) * den < num) ++i;
  if (i >= 3 && (std::pow(C, i) + 1.0) * den > num) --i;
  return std::min(i, top);
}

int derandomized_level(const PivotHierarchy& h, Length diameter, const Rational& eps) {
  return derandomized_level(h.C, h.levels.back().i, diameter, eps);
}

std::vector<Vertex> derandomized_pivots(const PivotHierarchy& h, Length diameter, const Rational& eps) {
  return h.levels.at(static_cast<std::size_t>(derandomized_level(h, diameter, eps))).pivots;
}

FdoOracle build_fdo(const Graph& g, const Rational& eps, std::vector<Vertex> pivots,
                    const DistanceSensitivityOracle& dso, Failure::Kind kind) {
  if (eps.num() <= 0) throw Error("build_fdo: eps must be positive");
  if (!is_strongly_connected(g)) throw Error("build_fdo: graph is not strongly connected");
  std::sort(pivots.begin(), pivots.end());
  pivots.erase(std::unique(pivots.begin(), pivots.end()), pivots.end());

  const std::size_t n = g.num_vertices();
  const Length diam0 = diameter(g);
  const bool edges = kind == Failure::Kind::kEdge;
  FdoOracle oracle(kind, n, edges ? g.num_edges() : n, diam0, eps, pivots);

  std::vector<std::vector<Length>> base;
  std::vector<char> in_h(edges ? g.num_edges() : n, 0);
  for (Vertex b : pivots) {
    const auto tree = sssp(g, b);
    base.push_back(distances_from(g, b));
    for (std::size_t v = 0; v < n; ++v) {
      const EdgeId e = tree.parent_edge(static_cast<Vertex>(v));
      if (e == kNoEdge) continue;
      if (edges) {
        in_h[static_cast<std::size_t>(e)] = 1;
      } else {
        in_h[static_cast<std::size_t>(g.edge(e).tail)] = 1;
        in_h[v] = 1;
      }
    }
  }

  for (std::size_t id = 0; id < in_h.size(); ++id) {
    if (!in_h[id]) continue;
    const Failure f = edges ? Failure::edge(static_cast<EdgeId>(id)) : Failure::vertex(static_cast<Vertex>(id));
    bool raised = false;
    Length worst = diam0;
    for (std::size_t a = 0; a < pivots.size(); ++a) {
      for (std::size_t b = 0; b < pivots.size(); ++b) {
        if (a == b) continue;
        if (!edges && (pivots[a] == f.id || pivots[b] == f.id)) continue;
        const Length d = dso.distance(pivots[a], pivots[b], f);
        if (d > base[a][static_cast<std::size_t>(pivots[b])]) raised = true;
        worst = std::max(worst, d);
      }
    }
    if (raised) oracle.set_phi(static_cast<std::int32_t>(id), worst);
  }

  if (edges) {
    for (EdgeId e : strong_bridges(g)) oracle.set_disconnecting(e);
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      if (diameter(g, Failure::vertex(static_cast<Vertex>(v))).is_infinite()) {
        oracle.set_disconnecting(static_cast<std::int32_t>(v));
      }
    }
  }
  return oracle;
}

namespace {

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

}  // namespace

FdoOracle build_fdo_derandomized(const Graph& g, const Rational& eps, Failure::Kind kind, FdoBuildInfo* info) {
  const ApspData data(g);
  const ReferenceDso dso(g, data);
  const Length D = diameter(g);
  FdoBuildInfo local;

  std::vector<Vertex> pivots;
  try {
    HdphOptions options;
    options.C = 2;
    // The verbatim window collapses to L = 1 below n = 2^6.
    options.window = PathWindow::kTight;
    options.include_vertex_failures = kind == Failure::Kind::kVertex;
    const int level = derandomized_level(2, hdph_top_level(g.num_vertices(), 2), D, eps);
    local.level = level;
    if (level <= 2) {
      pivots = all_vertices(g.num_vertices());
      local.pivot_source = "all";
      local.note = "level <= 2 of the hierarchy is V";
    } else {
      const auto h = hdph(data, dso, options);
      pivots = h.levels.at(static_cast<std::size_t>(level)).pivots;
      local.pivot_source = "hdph";
    }
  } catch (const Error& e) {
    pivots = all_vertices(g.num_vertices());
    local.pivot_source = "all";
    local.note = e.what();
  }
  if (info) *info = local;
  return build_fdo(g, eps, std::move(pivots), dso, kind);
}

FdoOracle build_fdo_sampled(const Graph& g, const Rational& eps, double c, std::uint64_t seed, Failure::Kind kind,
                            FdoBuildInfo* info) {
  const ApspData data(g);
  const ReferenceDso dso(g, data);
  const Length D = diameter(g);
  if (D.is_infinite()) throw Error("build_fdo: graph is not strongly connected");
  const double L = eps.to_double() * static_cast<double>(D.value()) / 2.0;
  FdoBuildInfo local;
  std::vector<Vertex> pivots;
  try {
    pivots = sample_pivots(g.num_vertices(), L, c, seed);
    local.pivot_source = "sample";
  } catch (const Error& e) {
    pivots = all_vertices(g.num_vertices());
    local.pivot_source = "all";
    local.note = e.what();
  }
  if (info) *info = local;
  return build_fdo(g, eps, std::move(pivots), dso, kind);
}

Rational eps_preset_large_diameter(std::size_t n, Length diameter) {
  if (diameter.is_infinite() || diameter.value() <= 0) throw Error("eps preset: diameter must be finite and positive");
  const double scaled = std::pow(static_cast<double>(n), 5.0 / 6.0) * 1000.0;
  return Rational(static_cast<std::int64_t>(std::ceil(scaled)), 1000 * diameter.value());
}

bool large_diameter_precondition(std::size_t n, std::size_t m, Length diameter, const Rational& eps) {
  if (diameter.is_infinite()) return false;
  const double nn = static_cast<double>(n);
  const double rhs = std::pow(nn, 4.0 / 3.0) * std::log(nn) / (eps.to_double() * std::sqrt(static_cast<double>(m)));
  return static_cast<double>(diameter.value()) > rhs;
}

}  // namespace fto
