#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ftoracle/graph.hpp"
#include "ftoracle/length.hpp"

namespace fto {

/// Set of edge ids read as the binary fraction sum of 2^-(id+1).
///
/// Edge id k lives in word k/64 at bit 63 - k%64, so comparing the words in
/// order compares the fractions numerically.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(std::size_t num_edges) : words_((num_edges + 63) / 64, 0) {}

  void set(EdgeId e) { words_[word(e)] |= bit(e); }
  bool test(EdgeId e) const {
    const auto w = word(e);
    return w < words_.size() && (words_[w] & bit(e)) != 0;
  }
  bool empty() const;
  std::size_t count() const;
  std::vector<EdgeId> ids() const;

  /// Union; equals the numeric sum when the sets are disjoint.
  EdgeMask& operator|=(const EdgeMask& other);
  friend EdgeMask operator|(EdgeMask a, const EdgeMask& b) { return a |= b; }

  friend bool operator==(const EdgeMask& a, const EdgeMask& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const EdgeMask& a, const EdgeMask& b);

 private:
  static std::size_t word(EdgeId e) { return static_cast<std::size_t>(e) / 64; }
  static std::uint64_t bit(EdgeId e) { return std::uint64_t{1} << (63 - static_cast<unsigned>(e) % 64); }

  std::vector<std::uint64_t> words_;
};

/// Path weight plus a perturbation of 2^-(id+1) per edge used. The perturbed
/// weights make every shortest path unique, and the total perturbation of a
/// simple path stays below 1, so ordering by base first is exact.
struct PerturbedDist {
  Length base;
  EdgeMask mask;

  static PerturbedDist infinity() { return {Length::infinity(), EdgeMask()}; }
  static PerturbedDist zero(std::size_t num_edges) { return {Length(0), EdgeMask(num_edges)}; }

  bool is_finite() const { return base.is_finite(); }

  /// Appends edge e with weight w.
  PerturbedDist plus_edge(EdgeId e, Weight w) const {
    PerturbedDist r{base + Length(w), mask};
    if (r.is_finite()) r.mask.set(e);
    return r;
  }

  /// Concatenation of two edge-disjoint paths.
  friend PerturbedDist operator+(const PerturbedDist& a, const PerturbedDist& b) {
    if (!a.is_finite() || !b.is_finite()) return infinity();
    return {a.base + b.base, a.mask | b.mask};
  }

  friend bool operator==(const PerturbedDist& a, const PerturbedDist& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const PerturbedDist& a, const PerturbedDist& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    if (!a.is_finite()) return std::strong_ordering::equal;
    return a.mask <=> b.mask;
  }
};

}  // namespace fto
