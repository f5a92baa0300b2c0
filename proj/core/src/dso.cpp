#include "ftoracle/dso.hpp"

#include <algorithm>
#include <set>

#include "ftoracle/greedy.hpp"

namespace fto {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::optional<Path> DsoQueryResult::path() const {
  if (distance_.is_infinite()) return std::nullopt;
  return oracle_->path(s_, t_, f_);
}

bool ReferenceDso::affects(Vertex s, Vertex t, const Failure& f) const {
  if (f.is_edge()) return apsp_.on_path(s, t, f.id);
  if (f.id == s || f.id == t) return true;
  if (apsp_.distance(s, t).is_infinite()) return false;
  for (Vertex v = apsp_.pred(s, t); v != s && v != kNoVertex; v = apsp_.pred(s, v)) {
    if (v == f.id) return true;
  }
  return false;
}

const ShortestPathTree& ReferenceDso::tree(Vertex s, const Failure& f) const {
  const auto key = std::make_tuple(s, static_cast<int>(f.kind), f.id);
  std::lock_guard lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(key, std::make_unique<ShortestPathTree>(sssp(g_, s, f.banned_edges(g_)))).first;
  }
  return *it->second;
}

Length ReferenceDso::distance(Vertex s, Vertex t, const Failure& f) const {
  if (f.is_vertex() && (f.id == s || f.id == t)) return Length::infinity();
  if (!affects(s, t, f)) return apsp_.distance(s, t);
  return tree(s, f).distance(t);
}

std::optional<Path> ReferenceDso::path(Vertex s, Vertex t, const Failure& f) const {
  if (f.is_vertex() && (f.id == s || f.id == t)) return std::nullopt;
  if (!affects(s, t, f)) return apsp_.path(s, t);
  return tree(s, f).path_to(g_, t);
}

std::size_t ReferenceDso::cached_trees() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

bool within(Length d, const Rational& r) {
  if (d.is_infinite()) return false;
  return static_cast<Wide>(d.value()) * r.den() <= static_cast<Wide>(r.num());
}

namespace {

bool at_least(Length d, const Rational& r) {
  if (d.is_infinite()) return true;
  return static_cast<Wide>(d.value()) * r.den() >= static_cast<Wide>(r.num());
}

Rational times(const Rational& a, std::int64_t num, std::int64_t den) {
  return Rational(a.num() * num, a.den() * den);
}

}  // namespace

TruncatedCore::TruncatedCore(const Graph& g, const ApspData& apsp, Rational r)
    : g_(g), apsp_(apsp), r_(r), bound_(r.num() / r.den()) {
  if (r < Rational(1, 1)) throw Error("truncated core: radius must be at least 1");
}

const ShortestPathTree& TruncatedCore::tree(Vertex s, EdgeId e) const {
  const auto key = std::make_pair(s, e);
  std::lock_guard lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const EdgeId banned[] = {e};
    it = cache_.emplace(key, std::make_unique<ShortestPathTree>(sssp(g_, s, banned, bound_))).first;
  }
  return *it->second;
}

Length TruncatedCore::distance(Vertex s, Vertex t, EdgeId e) const {
  const Length d = apsp_.on_path(s, t, e) ? tree(s, e).distance(t) : apsp_.distance(s, t);
  return within(d, r_) ? d : Length::infinity();
}

std::optional<Path> TruncatedCore::path(Vertex s, Vertex t, EdgeId e) const {
  if (distance(s, t, e).is_infinite()) return std::nullopt;
  return apsp_.on_path(s, t, e) ? tree(s, e).path_to(g_, t) : apsp_.path(s, t);
}

ExtendedDso::ExtendedDso(std::shared_ptr<const TruncatedDso> inner, std::vector<Vertex> pivots)
    : inner_(std::move(inner)), pivots_(std::move(pivots)), r_(times(inner_->radius(), 3, 2)) {
  std::sort(pivots_.begin(), pivots_.end());
  pivots_.erase(std::unique(pivots_.begin(), pivots_.end()), pivots_.end());
}

std::pair<Length, Vertex> ExtendedDso::answer(Vertex s, Vertex t, EdgeId e) const {
  const auto key = std::make_tuple(s, t, e);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  std::pair<Length, Vertex> result{inner_->distance(s, t, e), kNoVertex};
  if (result.first.is_infinite()) {
    for (Vertex z : pivots_) {
      const Length via = inner_->distance(s, z, e) + inner_->distance(z, t, e);
      if (via < result.first) result = {via, z};
    }
    if (!within(result.first, r_)) result = {Length::infinity(), kNoVertex};
  }

  std::lock_guard lock(mutex_);
  memo_.emplace(key, result);
  return result;
}

std::optional<Path> ExtendedDso::path(Vertex s, Vertex t, EdgeId e) const {
  const auto [d, z] = answer(s, t, e);
  if (d.is_infinite()) return std::nullopt;
  if (z == kNoVertex) return inner_->path(s, t, e);
  auto head = inner_->path(s, z, e);
  auto tail = inner_->path(z, t, e);
  if (!head || !tail) throw Error("extended dso: inner oracle lost a path");
  return concat(*head, *tail);
}

std::shared_ptr<const TruncatedDso> build_truncated_core(const Graph& g, const ApspData& apsp, const Rational& r) {
  return std::make_shared<TruncatedCore>(g, apsp, r);
}

std::shared_ptr<const TruncatedDso> extend_dso(std::shared_ptr<const TruncatedDso> dso, std::vector<Vertex> pivots) {
  return std::make_shared<ExtendedDso>(std::move(dso), std::move(pivots));
}

std::vector<Vertex> extend_pivots(const Graph& g, const ApspData& apsp, const std::vector<Vertex>& prev,
                                  const TruncatedDso& dso, const Rational& r_i, Weight M, ExtendStats* stats) {
  if (dso.radius() < r_i) throw Error("extend_pivots: dso radius below r_i");
  if (M < 1) throw Error("extend_pivots: weight bound below 1");
  const Rational lo = times(r_i, 1, 18);

  std::set<std::vector<Vertex>> family;
  for (Vertex x : prev) {
    for (Vertex y : prev) {
      if (x == y) continue;
      const Length d = apsp.distance(x, y);
      if (!within(d, r_i)) continue;
      const auto p = apsp.path(x, y);
      if (at_least(d, lo)) family.insert(p->vertices);
      for (EdgeId e : p->edges) {
        const Length de = dso.distance(x, y, e);
        if (de.is_finite() && at_least(de, lo) && within(de, r_i)) {
          family.insert(dso.path(x, y, e)->vertices);
        }
      }
    }
  }

  // ceil(r_i / (18 M))
  const std::int64_t den = r_i.den() * 18 * M;
  const auto L = static_cast<std::size_t>(std::max<std::int64_t>(1, (r_i.num() + den - 1) / den));
  std::vector<std::vector<Vertex>> paths(family.begin(), family.end());
  if (stats) {
    stats->num_paths = paths.size();
    stats->min_path_vertices = 0;
    for (const auto& p : paths) {
      if (stats->min_path_vertices == 0 || p.size() < stats->min_path_vertices) stats->min_path_vertices = p.size();
    }
  }
  (void)g;
  return greedy_pivot_selection(paths, L);
}

FullDso::FullDso(const Graph& g, const Rational& r1) : g_(g), apsp_(g) {
  const Weight M = g.max_weight();
  const Rational target(static_cast<std::int64_t>(g.num_vertices()) * M, 1);

  std::vector<Vertex> all(g.num_vertices());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);

  // Splitting a replacement path at a pivot needs r >= 4M, so the core
  // starts no lower than that.
  const Rational r0 = std::max(r1, Rational(4 * M, 1));
  top_ = build_truncated_core(g, apsp_, r0);
  levels_.push_back({r0, 0, 0});

  // pivot_sets_[j] holds B_{j+1}; B_{-1} = B_0 = V.
  // The hitting argument holds for the window [r/2 - 2M, r] and only once
  // r > 9M; below that B_i = V, which is still within O(Mn/r).
  const Rational small(9 * M, 1);
  for (std::size_t i = 1; top_->radius() < target; ++i) {
    const std::vector<Vertex>& prev = i >= 3 ? pivot_sets_[i - 3] : all;
    ExtendStats stats;
    auto pivots = top_->radius() <= small ? all : extend_pivots(g, apsp_, prev, *top_, top_->radius(), M, &stats);
    levels_.back().num_pivots = pivots.size();
    levels_.back().num_paths = stats.num_paths;
    pivot_sets_.push_back(pivots);
    top_ = extend_dso(top_, std::move(pivots));
    levels_.push_back({top_->radius(), 0, 0});
  }
}

EdgeId FullDso::edge_of(const Failure& f) const {
  if (!f.is_edge()) throw Error("full dso: only edge failures are supported");
  return f.id;
}

Length FullDso::distance(Vertex s, Vertex t, const Failure& f) const { return top_->distance(s, t, edge_of(f)); }

std::optional<Path> FullDso::path(Vertex s, Vertex t, const Failure& f) const {
  return top_->path(s, t, edge_of(f));
}

std::unique_ptr<FullDso> build_full_dso(const Graph& g, const Rational& r1) {
  return std::make_unique<FullDso>(g, r1);
}

}  // namespace fto
