#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chs/error.hpp"

namespace chs {

/// Simple undirected graph: order n plus one bit per unordered vertex pair.
///
/// Pair bits are stored column-major over the upper triangle, i.e. in the
/// order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... — the same order the
/// graph6 format streams them, so encode/decode is a straight copy.
/// Vertices are 0-based internally; construction from user input is 1-based.
/// Instances are immutable once built and safe to share across threads.
class Graph {
 public:
  /// Graph on n >= 1 vertices with no edges.
  static Graph empty(int n) {
    require(n >= 1, errc::invalid_parameter, "graph order must be >= 1");
    return Graph(n);
  }

  /// Build from 1-based endpoint pairs. Duplicate edges collapse; loops and
  /// endpoints outside 1..n are rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [i, j] : edges) {
      require(i != j, errc::loop_rejected,
              "loop edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
      require(1 <= i && i <= n && 1 <= j && j <= n, errc::index_out_of_range,
              "edge (" + std::to_string(i) + "," + std::to_string(j) + ") exceeds order " +
                  std::to_string(n));
      g.set_edge(i - 1, j - 1);
    }
    g.recount_edges();
    return g;
  }

  /// Build from a raw upper-triangle bit vector (pair-bit order above).
  /// `bits[b]` set means pair b is an edge; bits beyond n(n-1)/2 must be absent.
  static Graph from_pair_bits(int n, const std::vector<bool>& bits) {
    Graph g = empty(n);
    std::size_t np = g.pair_count();
    require(bits.size() <= np, errc::invalid_parameter, "pair bit vector too long");
    for (std::size_t b = 0; b < bits.size(); ++b)
      if (bits[b]) g.bits_[b >> 6] |= std::uint64_t(1) << (b & 63);
    g.recount_edges();
    return g;
  }

  /// Build from a packed pair-bit mask, usable while n(n-1)/2 <= 64 (n <= 11).
  /// Bit b of `mask` is pair b. This is the enumeration fast path.
  static Graph from_pair_mask(int n, std::uint64_t mask) {
    Graph g = empty(n);
    require(g.pair_count() <= 64, errc::invalid_parameter, "order too large for a 64-bit mask");
    if (g.pair_count() < 64) {
      require(mask >> g.pair_count() == 0, errc::invalid_parameter, "mask has stray bits");
    }
    if (!g.bits_.empty()) g.bits_[0] = mask;
    g.recount_edges();
    return g;
  }

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }
  std::size_t pair_count() const noexcept {
    return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  /// Edge test, 0-based vertices.
  bool has_edge(int i, int j) const noexcept {
    if (i == j) return false;
    std::size_t b = pair_index(i, j);
    return (bits_[b >> 6] >> (b & 63)) & 1u;
  }

  /// Pair bit b in the column-major order, 0 <= b < pair_count().
  bool pair_bit(std::size_t b) const noexcept { return (bits_[b >> 6] >> (b & 63)) & 1u; }

  /// Calls f(i, j) for every edge with i < j (0-based), in pair-bit order.
  template <typename F>
  void for_each_edge(F&& f) const {
    std::size_t b = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++b)
        if (pair_bit(b)) f(i, j);
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n_, 0);
    for_each_edge([&](int i, int j) {
      ++deg[i];
      ++deg[j];
    });
    return deg;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (u != v && has_edge(u, v)) out.push_back(u);
    return out;
  }

  /// Dense 0/1 adjacency matrix, row-major.
  std::vector<int> adjacency_matrix() const {
    std::vector<int> a(static_cast<std::size_t>(n_) * n_, 0);
    for_each_edge([&](int i, int j) {
      a[static_cast<std::size_t>(i) * n_ + j] = 1;
      a[static_cast<std::size_t>(j) * n_ + i] = 1;
    });
    return a;
  }

  bool operator==(const Graph& other) const = default;

  static std::size_t pair_index(int i, int j) noexcept {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }

 private:
  explicit Graph(int n) : n_(n), m_(0), bits_((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0) {}

  void set_edge(int i, int j) {
    std::size_t b = pair_index(i, j);
    bits_[b >> 6] |= std::uint64_t(1) << (b & 63);
  }

  void recount_edges() {
    int m = 0;
    for (std::uint64_t w : bits_) m += __builtin_popcountll(w);
    m_ = m;
  }

  int n_;
  int m_;
  std::vector<std::uint64_t> bits_;
};

enum class Family { path, complete, star, complete_bipartite, cycle };

/// Family selector: P_n, K_n, S_n, C_n use `a` = n; K_{m,n} uses (a, b) = (m, n).
struct FamilyId {
  Family kind;
  int a = 0;
  int b = 0;

  static FamilyId path(int n) { return {Family::path, n, 0}; }
  static FamilyId complete(int n) { return {Family::complete, n, 0}; }
  static FamilyId star(int n) { return {Family::star, n, 0}; }
  static FamilyId complete_bipartite(int m, int n) { return {Family::complete_bipartite, m, n}; }
  static FamilyId cycle(int n) { return {Family::cycle, n, 0}; }
};

inline Graph family(FamilyId id) {
  require(id.a >= 1, errc::invalid_parameter, "family parameter must be >= 1");
  std::vector<std::pair<int, int>> e;
  switch (id.kind) {
    case Family::path:
      for (int i = 1; i < id.a; ++i) e.emplace_back(i, i + 1);
      return Graph::from_edges(id.a, e);
    case Family::complete:
      for (int j = 2; j <= id.a; ++j)
        for (int i = 1; i < j; ++i) e.emplace_back(i, j);
      return Graph::from_edges(id.a, e);
    case Family::star:
      // S_n: central vertex 1 with n-1 leaves.
      for (int i = 2; i <= id.a; ++i) e.emplace_back(1, i);
      return Graph::from_edges(id.a, e);
    case Family::complete_bipartite: {
      require(id.b >= 1, errc::invalid_parameter, "complete bipartite needs two positive parts");
      int m = id.a, n = id.b;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) e.emplace_back(i, m + j);
      return Graph::from_edges(m + n, e);
    }
    case Family::cycle:
      require(id.a >= 3, errc::invalid_parameter, "cycle needs order >= 3");
      for (int i = 1; i < id.a; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(id.a, 1);
      return Graph::from_edges(id.a, e);
  }
  fail(errc::invalid_parameter, "unknown family kind");
}

/// Block-diagonal union; spectrum is the multiset union of the parts'.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e;
  g.for_each_edge([&](int i, int j) { e.emplace_back(i + 1, j + 1); });
  int off = g.order();
  h.for_each_edge([&](int i, int j) { e.emplace_back(off + i + 1, off + j + 1); });
  return Graph::from_edges(g.order() + h.order(), e);
}

/// Bipartite double cover: adjacency [[0, A], [A, 0]] on 2n vertices.
/// Spectrum is {+lambda, -lambda : lambda in spec(g)}.
inline Graph tensor_with_k2(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  int n = g.order();
  g.for_each_edge([&](int i, int j) {
    e.emplace_back(i + 1, n + j + 1);
    e.emplace_back(j + 1, n + i + 1);
  });
  return Graph::from_edges(2 * n, e);
}

inline bool is_connected(const Graph& g) {
  int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && g.has_edge(u, v)) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

inline bool is_tree(const Graph& g) {
  return g.edge_count() == g.order() - 1 && is_connected(g);
}

/// Two-colorability over every component (disconnected graphs allowed).
inline bool is_bipartite(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (!g.has_edge(u, v)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace chs
