#include "ftoracle/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "ftoracle/generators.hpp"

namespace fto {

namespace {

std::size_t isqrt(std::size_t m) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

void check_square(const BitMatrix& X, std::size_t N, const char* what) {
  if (X.size() != N) throw Error(std::string(what) + ": matrix must be " + std::to_string(N) + "x" + std::to_string(N));
  for (const auto& row : X) {
    if (row.size() != N) throw Error(std::string(what) + ": matrix must be " + std::to_string(N) + "x" + std::to_string(N));
    for (auto x : row) {
      if (x > 1) throw Error(std::string(what) + ": matrix entries must be 0 or 1");
    }
  }
}

bool nonnull(const BitMatrix& X) {
  return std::any_of(X.begin(), X.end(), [](const auto& row) {
    return std::any_of(row.begin(), row.end(), [](auto x) { return x != 0; });
  });
}

}  // namespace

BitMatrix random_admissible_matrix(std::size_t N, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix X(N, std::vector<std::uint8_t>(N, 1));
  for (std::size_t i = 1; i < N; ++i) {
    for (std::size_t j = 1; j < N; ++j) X[i][j] = rng.bernoulli(0.5) ? 1 : 0;
  }
  return X;
}

BitMatrix random_nonnull_matrix(std::size_t N, std::uint64_t seed) {
  if (N == 0) throw Error("matrix dimension must be positive");
  Rng rng(seed);
  for (;;) {
    BitMatrix X(N, std::vector<std::uint8_t>(N, 0));
    for (auto& row : X) {
      for (auto& x : row) x = rng.bernoulli(0.5) ? 1 : 0;
    }
    if (nonnull(X)) return X;
  }
}

BitMatrix parse_matrix(std::istream& in) {
  BitMatrix X;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::uint8_t> row;
    std::string tok;
    while (ls >> tok) {
      if (tok != "0" && tok != "1") throw Error("matrix entries must be 0 or 1, got '" + tok + "'");
      row.push_back(tok == "1" ? 1 : 0);
    }
    if (!row.empty()) X.push_back(std::move(row));
  }
  for (const auto& row : X) {
    if (row.size() != X.size()) throw Error("matrix must be square");
  }
  return X;
}

BitMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const BitMatrix& X) {
  for (const auto& row : X) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << static_cast<int>(row[j]);
    out << '\n';
  }
}

std::int64_t FdoLbInstance::raised_diameter() const { return D % 2 == 1 ? (3 * D - 1) / 2 : 3 * D / 2 - 1; }

FdoLbInstance gen_fdo_lb(std::size_t n, std::size_t m, std::int64_t D, const BitMatrix& X) {
  if (n < 4) throw Error("fdo-lb: need n >= 4");
  if (m < 4 || m > n * n) throw Error("fdo-lb: need 4 <= m <= n^2");
  if (D < 3) throw Error("fdo-lb: need D >= 3");
  const std::size_t N = isqrt(m);
  check_square(X, N, "fdo-lb");
  for (std::size_t i = 0; i < N; ++i) {
    if (!X[0][i] || !X[i][0]) throw Error("fdo-lb: first row and column of X must be all ones");
  }
  const bool odd = D % 2 == 1;
  const std::size_t t = static_cast<std::size_t>(odd ? (D - 1) / 2 : D / 2 - 1);
  const std::size_t core = (2 * t + 2) * N + (odd ? 0 : 1);
  if (n < core) {
    throw Error("fdo-lb: n = " + std::to_string(n) + " is too small, the layout needs " + std::to_string(core) +
                " vertices");
  }

  FdoLbInstance inst;
  inst.D = D;
  inst.N = N;
  inst.t = t;
  inst.X = X;
  inst.bc_edge.assign(N, std::vector<EdgeId>(N, kNoEdge));
  const Vertex hub = odd ? kNoVertex : static_cast<Vertex>(core - 1);

  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    edges.push_back({u, v, 1});
    return static_cast<EdgeId>(edges.size() - 1);
  };
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (!X[i][j]) continue;
      add(inst.a(t - 1, i), inst.c(j));
      add(inst.b(i), inst.d(0, j));
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k + 1 < t; ++k) add(inst.a(k, i), inst.a(k + 1, i));
    add(inst.a(t - 1, i), inst.b(i));
  }
  for (std::size_t j = 0; j < N; ++j) {
    add(inst.c(j), inst.d(0, j));
    for (std::size_t k = 1; k < t; ++k) add(inst.d(k - 1, j), inst.d(k, j));
  }
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) inst.bc_edge[i][j] = add(inst.b(i), inst.c(j));
  }
  std::vector<Vertex> cd;
  for (std::size_t j = 0; j < N; ++j) cd.push_back(inst.c(j));
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t j = 0; j < N; ++j) cd.push_back(inst.d(k, j));
  }
  if (odd) {
    for (Vertex x : cd) {
      for (std::size_t i = 0; i < N; ++i) add(x, inst.a(0, i));
    }
  } else {
    for (Vertex x : cd) add(x, hub);
    for (std::size_t i = 0; i < N; ++i) add(hub, inst.a(0, i));
  }
  for (std::size_t r = core; r < n; ++r) {
    const auto rv = static_cast<Vertex>(r);
    add(rv, inst.c(0));
    add(inst.c(0), rv);
    add(rv, inst.a(0, 0));
  }
  inst.graph = Graph(n, std::move(edges));
  return inst;
}

BitMatrix decode_fdo_lb(const FdoLbInstance& inst, const std::function<Length(EdgeId)>& diam_query) {
  const std::size_t N = inst.N;
  BitMatrix X(N, std::vector<std::uint8_t>(N, 1));
  for (std::size_t i = 1; i < N; ++i) {
    for (std::size_t j = 1; j < N; ++j) X[i][j] = diam_query(inst.bc_edge[i][j]) == Length(inst.D) ? 1 : 0;
  }
  return X;
}

ConnLbInstance gen_conn_lb(std::size_t n, std::size_t f, const std::vector<BitMatrix>& Xs) {
  if (f < 1 || f > 20) throw Error("conn-lb: need 1 <= f <= 20");
  const std::size_t N = std::size_t{1} << f;
  const std::size_t K = 4 * N - 2;
  const std::size_t alpha = n / K;
  if (alpha < 1) throw Error("conn-lb: n = " + std::to_string(n) + " is smaller than one block of " + std::to_string(K));
  if (Xs.size() != alpha) {
    throw Error("conn-lb: expected " + std::to_string(alpha) + " matrices, got " + std::to_string(Xs.size()));
  }
  for (const auto& X : Xs) {
    check_square(X, N, "conn-lb");
    if (!nonnull(X)) throw Error("conn-lb: every matrix must be non-null");
  }

  ConnLbInstance inst;
  inst.f = f;
  inst.N = N;
  inst.K = K;
  inst.alpha = alpha;
  inst.Xs = Xs;
  const std::size_t tree = inst.tree_size();
  const std::size_t first_leaf = N - 1;
  inst.left_edge.assign(alpha, std::vector<EdgeId>(tree, kNoEdge));
  inst.right_edge.assign(alpha, std::vector<EdgeId>(tree, kNoEdge));
  inst.leaf_edge.assign(alpha, std::vector<std::vector<EdgeId>>(N, std::vector<EdgeId>(N, kNoEdge)));

  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    edges.push_back({u, v, 1});
    return static_cast<EdgeId>(edges.size() - 1);
  };
  for (std::size_t b = 0; b < alpha; ++b) {
    for (std::size_t c = 1; c < tree; ++c) inst.left_edge[b][c] = add(inst.left(b, (c - 1) / 2), inst.left(b, c));
    for (std::size_t c = 1; c < tree; ++c) inst.right_edge[b][c] = add(inst.right(b, c), inst.right(b, (c - 1) / 2));
    for (std::size_t j1 = 0; j1 < N; ++j1) {
      for (std::size_t j2 = 0; j2 < N; ++j2) {
        if (Xs[b][j1][j2]) inst.leaf_edge[b][j1][j2] = add(inst.left(b, first_leaf + j1), inst.right(b, first_leaf + j2));
      }
    }
    // Return edges keep G strongly connected when some leaf has an all-zero
    // row; they only lead back to s_i, so s_i still reaches t_i only through
    // a leaf-pair edge.
    for (std::size_t j = 0; j < N; ++j) add(inst.left(b, first_leaf + j), inst.s(b));
    for (std::size_t c = 1; c < tree; ++c) add(inst.right(b, c), inst.s(b));
  }
  for (std::size_t b = 1; b < alpha; ++b) add(inst.t(b - 1), inst.s(b));
  const Vertex last = inst.t(alpha - 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<Vertex>(v) != last) add(last, static_cast<Vertex>(v));
  }
  for (std::size_t v = alpha * K; v < n; ++v) add(static_cast<Vertex>(v), inst.s(0));
  inst.graph = Graph(n, std::move(edges));
  return inst;
}

std::vector<EdgeId> failure_set(const ConnLbInstance& inst, std::size_t block, std::size_t j1, std::size_t j2) {
  if (block >= inst.alpha || j1 >= inst.N || j2 >= inst.N) throw Error("failure_set: index out of range");
  std::vector<EdgeId> F;
  auto siblings = [&](std::size_t leaf, const std::vector<EdgeId>& tree_edges) {
    for (std::size_t c = leaf; c > 0; c = (c - 1) / 2) {
      const std::size_t sibling = c % 2 == 1 ? c + 1 : c - 1;
      F.push_back(tree_edges[sibling]);
    }
  };
  siblings(inst.N - 1 + j1, inst.left_edge[block]);
  siblings(inst.N - 1 + j2, inst.right_edge[block]);
  std::sort(F.begin(), F.end());
  return F;
}

std::vector<BitMatrix> decode_conn_lb(const ConnLbInstance& inst,
                                      const std::function<bool(std::span<const EdgeId>)>& connected_query) {
  std::vector<BitMatrix> out(inst.alpha, BitMatrix(inst.N, std::vector<std::uint8_t>(inst.N, 0)));
  for (std::size_t b = 0; b < inst.alpha; ++b) {
    for (std::size_t j1 = 0; j1 < inst.N; ++j1) {
      for (std::size_t j2 = 0; j2 < inst.N; ++j2) {
        const auto F = failure_set(inst, b, j1, j2);
        out[b][j1][j2] = connected_query(F) ? 1 : 0;
      }
    }
  }
  return out;
}

}  // namespace fto
