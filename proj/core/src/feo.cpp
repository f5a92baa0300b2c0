#include "ftoracle/feo.hpp"

#include <algorithm>

#include "ftoracle/shortest_paths.hpp"

namespace fto {

std::vector<EdgeId> normalize_failures(std::span<const EdgeId> failed) {
  std::vector<EdgeId> out(failed.begin(), failed.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BruteForceMultiDso::BruteForceMultiDso(Graph g, std::size_t f) : g_(std::move(g)), f_(f) {}

Length BruteForceMultiDso::distance(Vertex s, Vertex t, std::span<const EdgeId> failed) const {
  auto key = std::make_pair(s, normalize_failures(failed));
  if (key.second.size() > f_) throw Error("multi dso: more failures than the sensitivity");
  if (s < 0 || static_cast<std::size_t>(s) >= g_.num_vertices() || t < 0 ||
      static_cast<std::size_t>(t) >= g_.num_vertices()) {
    throw Error("multi dso: vertex out of range");
  }
  std::lock_guard lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    auto dist = distances_from(g_, s, key.second);
    it = cache_.emplace(std::move(key), std::move(dist)).first;
  }
  return it->second[static_cast<std::size_t>(t)];
}

std::shared_ptr<const BruteForceMultiDso> build_multi_dso(Graph g, std::size_t f) {
  return std::make_shared<BruteForceMultiDso>(std::move(g), f);
}

FeoOracle::FeoOracle(std::vector<Length> ecc0, std::vector<Vertex> edge_heads,
                     std::shared_ptr<const MultiFailureDso> dso, double sigma, std::size_t f)
    : ecc0_(std::move(ecc0)), heads_(std::move(edge_heads)), dso_(std::move(dso)), sigma_(sigma), f_(f) {
  if (!dso_) throw Error("feo: missing dso");
  if (dso_->sensitivity() < f_) throw Error("feo: dso sensitivity below f");
}

Length FeoOracle::query(Vertex s, std::span<const EdgeId> failed, FeoQueryStats* stats) const {
  const auto F = normalize_failures(failed);
  if (F.size() > f_) throw Error("feo query: more failures than the sensitivity");
  if (s < 0 || static_cast<std::size_t>(s) >= ecc0_.size()) throw Error("feo query: source out of range");
  if (stats) *stats = {};
  Length worst(0);
  for (EdgeId e : F) {
    if (e < 0 || static_cast<std::size_t>(e) >= heads_.size()) throw Error("feo query: edge id out of range");
    worst = std::max(worst, dso_->distance(s, heads_[static_cast<std::size_t>(e)], F));
    if (stats) ++stats->dso_calls;
  }
  return ecc0_[static_cast<std::size_t>(s)] + worst;
}

FeoOracle build_feo(const Graph& g, std::shared_ptr<const MultiFailureDso> dso, double sigma, std::size_t f) {
  std::vector<Length> ecc0;
  ecc0.reserve(g.num_vertices());
  for (std::size_t x = 0; x < g.num_vertices(); ++x) ecc0.push_back(eccentricity(g, static_cast<Vertex>(x)));
  std::vector<Vertex> heads;
  heads.reserve(g.num_edges());
  for (const Edge& e : g.edges()) heads.push_back(e.head);
  return FeoOracle(std::move(ecc0), std::move(heads), std::move(dso), sigma, f);
}

}  // namespace fto
